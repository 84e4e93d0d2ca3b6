"""Plain-text formats: graph files, colouring files, traces.

Graph file::

    pg 1
    n 4
    r 0 2 1 3
    r 1 2 2 0
    r 2 2 3 1
    r 3 2 0 2
    outer 0 1
    color 0 1
    ...

Blank lines and ``#`` comments are ignored.  Rotations are clockwise.
``serialize`` writes the canonical form (rotation lines by vertex, colour
lines by vertex) and ``parse`` of that text serializes back byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    Asymmetric,
    BadOuterDart,
    BoundaryNotOuterCycle,
    EmbeddingError,
    Loop,
    MultiEdge,
    ParseError,
)
from .planar import RotationGraph, build
from .validity import BoundaryColoring


@dataclass(frozen=True)
class GraphFile:
    graph: RotationGraph
    boundary: BoundaryColoring | None = None


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield no, body


def _ints(tokens: Sequence[str], no: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", no) from None


def _located(exc: EmbeddingError, no: int | None) -> EmbeddingError:
    """Same error class, message prefixed with the offending line."""
    if no is not None:
        exc.args = (f"line {no}: {exc}",)
    exc.line = no
    return exc


def parse(text: str) -> GraphFile:
    """Parse and validate a graph file.

    Raises ``ParseError`` for syntax problems and the ``build`` errors
    (``MultiEdge``, ``NotSphere``, ...) with a ``line`` attribute set.
    """
    it = iter(_lines(text))
    first = next(it, None)
    if first is None or first[1] != ["pg", "1"]:
        raise ParseError("missing header 'pg 1'", first[0] if first else 1)
    n = None
    n_line = None
    rot: dict[int, list[int]] = {}
    rot_line: dict[int, int] = {}
    outer = None
    outer_line = None
    colors: dict[int, int] = {}
    color_line: dict[int, int] = {}
    for no, tok in it:
        key, args = tok[0], tok[1:]
        if key == "n":
            if n is not None:
                raise ParseError("repeated 'n' line", no)
            if len(args) != 1:
                raise ParseError("'n' takes one argument", no)
            (n,) = _ints(args, no)
            if n < 0:
                raise ParseError("negative vertex count", no)
            n_line = no
        elif n is None:
            raise ParseError(f"'{key}' before the 'n' line", no)
        elif key == "r":
            vals = _ints(args, no)
            if len(vals) < 2:
                raise ParseError("'r' needs a vertex and a degree", no)
            v, d, nbrs = vals[0], vals[1], vals[2:]
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} out of range 0..{n - 1}", no)
            if v in rot:
                raise ParseError(f"second rotation for vertex {v} (first on line {rot_line[v]})", no)
            if d != len(nbrs):
                raise ParseError(f"degree {d} but {len(nbrs)} neighbours listed", no)
            for u in nbrs:
                if not 0 <= u < n:
                    raise _located(EmbeddingError(f"rotation of {v} mentions unknown vertex {u}"), no)
                if u == v:
                    raise _located(Loop(f"loop at vertex {v}"), no)
            if len(set(nbrs)) != len(nbrs):
                raise _located(MultiEdge(f"repeated neighbour in the rotation of {v}"), no)
            rot[v] = nbrs
            rot_line[v] = no
        elif key == "outer":
            if outer is not None:
                raise ParseError("repeated 'outer' line", no)
            if len(args) != 2:
                raise ParseError("'outer' takes two vertices", no)
            outer = tuple(_ints(args, no))
            outer_line = no
        elif key == "color":
            if len(args) != 2:
                raise ParseError("'color' takes a vertex and a colour", no)
            v, c = _ints(args, no)
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} out of range", no)
            if c not in (1, 2, 3):
                raise ParseError(f"colour {c} not in 1..3", no)
            if v in colors:
                raise ParseError(f"second colour for vertex {v}", no)
            colors[v] = c
            color_line[v] = no
        else:
            raise ParseError(f"unknown record '{key}'", no)
    if n is None:
        raise ParseError("missing 'n' line", None)
    missing = [v for v in range(n) if v not in rot]
    if missing:
        raise ParseError(f"no rotation line for vertex {missing[0]}", n_line)
    for v, nbrs in rot.items():
        for u in nbrs:
            if v not in rot[u]:
                raise _located(Asymmetric(v, u), rot_line[v])
    if outer is not None and (not 0 <= outer[0] < n or outer[1] not in rot[outer[0]]):
        raise _located(BadOuterDart(f"outer dart {outer} is not an edge"), outer_line)
    try:
        g = build([rot[v] for v in range(n)], outer)
    except BadOuterDart as exc:
        raise _located(exc, outer_line if outer_line is not None else n_line)
    except EmbeddingError as exc:
        raise _located(exc, n_line)
    if not colors:
        return GraphFile(g)
    first_color = min(color_line.values())
    cyc = g.outer_cycle
    if not cyc or len(set(cyc)) != len(cyc) or set(colors) != set(cyc):
        raise BoundaryNotOuterCycle(
            f"colour lines cover {sorted(colors)}, outer face walk is {list(cyc)}", first_color)
    b = BoundaryColoring(cyc, tuple(colors[v] for v in cyc))
    if not b.is_proper():
        k = len(cyc)
        i = next(i for i in range(k) if b.colors[i] == b.colors[(i + 1) % k])
        u, w = cyc[i], cyc[(i + 1) % k]
        raise ParseError(f"boundary colouring not proper on edge {u}-{w}",
                         max(color_line[u], color_line[w]))
    return GraphFile(g, b)


def serialize(g: RotationGraph, boundary: BoundaryColoring | Mapping[int, int] | None = None) -> str:
    out = ["pg 1", f"n {g.n}"]
    for v, r in enumerate(g.rot):
        out.append(" ".join(["r", str(v), str(len(r)), *map(str, r)]))
    if g.outer is not None:
        out.append(f"outer {g.outer[0]} {g.outer[1]}")
    if boundary is not None:
        cols = boundary.as_dict() if isinstance(boundary, BoundaryColoring) else dict(boundary)
        out.extend(f"color {v} {cols[v]}" for v in sorted(cols))
    return "\n".join(out) + "\n"


def read_graph(path: str) -> GraphFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# ---------------------------------------------------------------------------
# colourings


def format_coloring(colors: Sequence[int]) -> str:
    return "".join(f"c {v} {c}\n" for v, c in enumerate(colors))


def parse_coloring(text: str, n: int) -> list[int]:
    """Read ``c <v> <color>`` lines; every vertex 0..n-1 exactly once."""
    col: dict[int, int] = {}
    for no, tok in _lines(text):
        if tok[0] != "c" or len(tok) != 3:
            raise ParseError("expected 'c <v> <color>'", no)
        v, c = _ints(tok[1:], no)
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range 0..{n - 1}", no)
        if v in col:
            raise ParseError(f"second colour for vertex {v}", no)
        col[v] = c
    missing = [v for v in range(n) if v not in col]
    if missing:
        raise ParseError(f"vertex {missing[0]} has no colour", None)
    return [col[v] for v in range(n)]


def format_trace(lines: Sequence[str]) -> str:
    return "".join(line + "\n" for line in lines)
