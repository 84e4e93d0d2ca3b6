"""Precolouring extension on valid pairs and 3-colouring of triangle-free plane graphs.

``extend`` works in two stages.  ``plan`` applies reductions recursively and
records the resulting tree; it depends only on the embedding, so the tree is
cached and reused for every boundary colouring of the same graph.  The
colouring pass then walks the tree: children first (outside before inside),
lifting each result back to its parent.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import networkx as nx

from .discharging import audit
from .errors import NoReductionFound, ProofOrderViolation, TriangleFound
from .oracle import brute_force_3color, first_violation
from .planar import RotationGraph, components, find_triangle, reroot, restrict, to_networkx
from .reductions import Kind, Reduction, check_child_boundary, detect, apply, smallest_free
from .validity import BoundaryColoring, ValidPair, is_valid_boundary


@dataclass(frozen=True)
class SolverConfig:
    use_brute_base: bool = True
    brute_base_max_vertices: int = 9
    emit_trace: bool = False


@dataclass(frozen=True)
class Step:
    depth: int
    kind: str
    verts: tuple[int, ...]
    child_sizes: tuple[tuple[int, int], ...]

    def line(self, k: int) -> str:
        verts = " ".join(map(str, self.verts))
        return f"step {k} depth {self.depth} kind {self.kind} verts {verts}"


@dataclass
class Trace:
    steps: list[Step] = field(default_factory=list)

    def lines(self) -> list[str]:
        return [s.line(k) for k, s in enumerate(self.steps)]

    @property
    def max_depth(self) -> int:
        return max((s.depth for s in self.steps), default=0)


@dataclass(frozen=True)
class Plan:
    graph: RotationGraph
    kind: str  # "base", "brute" or a reduction kind
    reduction: Reduction | None = None
    children: tuple["Plan", ...] = ()


def _is_bare_cycle(g: RotationGraph) -> bool:
    return g.n == len(g.outer_cycle) and g.m == g.n


@functools.lru_cache(maxsize=1024)
def plan(g: RotationGraph, use_brute_base: bool = False, brute_max: int = 9) -> Plan:
    """Reduction tree for the valid-pair graph ``g`` (outer cycle = boundary)."""
    if _is_bare_cycle(g):
        return Plan(g, "base")
    if use_brute_base and g.n <= brute_max:
        return Plan(g, "brute")
    hit = detect(g)
    if hit is None:
        rep = audit(g)
        raise NoReductionFound(
            f"no reducible configuration in graph with n={g.n}, m={g.m}; "
            f"negative faces {rep.negative_faces}", audit=rep)
    red = apply(g, *hit)
    kids = tuple(plan(c, use_brute_base, brute_max) for c in red.children)
    return Plan(g, red.kind.value, red, kids)


def _solve(node: Plan, phi: dict[int, int], depth: int, trace: Trace | None) -> list[int]:
    g = node.graph
    if node.kind == "base":
        return [phi[v] for v in range(g.n)]
    if node.kind == "brute":
        col = brute_force_3color(g, phi)
        if col is None:
            raise RuntimeError(f"oracle found no extension on n={g.n}; boundary {phi}")
        return col
    red = node.reduction
    if trace is not None:
        trace.steps.append(Step(depth, red.kind.short, red.verts,
                                tuple((c.n, c.m) for c in red.children)))
    cols: list[list[int]] = []
    for i, child in enumerate(node.children):
        b = red.child_boundary(i, phi, cols[0] if cols else None)
        check_child_boundary(red, b)
        cols.append(_solve(child, b.as_dict(), depth + 1, trace))
    return red.lift(phi, cols)


def extend(p: ValidPair, cfg: SolverConfig = SolverConfig()) -> tuple[list[int], Trace]:
    """Proper 3-colouring of ``p.graph`` agreeing with ``p.boundary``."""
    if not is_valid_boundary(p.boundary):
        raise ValueError("boundary coloring not valid")
    tree = plan(p.graph, cfg.use_brute_base, cfg.brute_base_max_vertices)
    trace = Trace() if cfg.emit_trace else None
    phi = p.boundary.as_dict()
    col = _solve(tree, phi, 0, trace)
    bad = first_violation(p.graph, col, phi)
    if bad is not None:
        raise RuntimeError(f"extend produced an invalid colouring at {bad}")
    return col, trace if trace is not None else Trace()


# ---------------------------------------------------------------------------
# whole-graph driver

_START = {4: (1, 2, 1, 2), 5: (1, 2, 1, 2, 3)}


def _color_block(g: RotationGraph, cfg: SolverConfig, trace: Trace) -> list[int]:
    """2-connected, min degree >= 3: root at a face of length <= 5 and extend."""
    short = [f for f in g.faces if f.length <= 5]
    if not short:
        raise ProofOrderViolation("min-degree-3 triangle-free plane block without a face of length <= 5")
    f = min(short, key=lambda f: (f.length, f.darts[0]))
    h = reroot(g, f.darts[0])
    cyc = h.outer_cycle
    p = ValidPair(h, BoundaryColoring(cyc, _START[len(cyc)]))
    col, t = extend(p, cfg)
    trace.steps.extend(t.steps)
    return col


def _merge_blocks(blocks: list[tuple[list[int], dict[int, int]]]) -> dict[int, int]:
    """Glue block colourings along the block tree by permuting colours."""
    colored: dict[int, int] = {}
    pending = list(blocks)
    while pending:
        for idx, (verts, col) in enumerate(pending):
            shared = [v for v in verts if v in colored]
            if shared or not colored:
                break
        else:  # pragma: no cover - blocks of a connected graph form a tree
            raise RuntimeError("blocks do not form a connected tree")
        verts, col = pending.pop(idx)
        if len(shared) > 1:
            raise RuntimeError(f"blocks share {len(shared)} vertices")
        perm = {1: 1, 2: 2, 3: 3}
        if shared:
            a, b = col[shared[0]], colored[shared[0]]
            perm[a], perm[b] = b, a
        for v in verts:
            colored[v] = perm[col[v]]
    return colored


def _color_connected(g: RotationGraph, cfg: SolverConfig, trace: Trace) -> list[int]:
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    stack = []
    queue = [v for v in range(g.n) if deg[v] <= 2]
    while queue:
        v = queue.pop()
        if not alive[v] or deg[v] > 2:
            continue
        alive[v] = False
        stack.append(v)
        for u in g.rot[v]:
            if alive[u]:
                deg[u] -= 1
                if deg[u] <= 2:
                    queue.append(u)
    col = [0] * g.n
    rest = [v for v in range(g.n) if alive[v]]
    if rest:
        h, ids = restrict(g, rest)
        sub = _color_any(h, cfg, trace)
        for v in rest:
            col[v] = sub[ids[v]]
    for v in reversed(stack):
        col[v] = smallest_free({col[u] for u in g.rot[v] if col[u]})
    return col


def _color_core(g: RotationGraph, cfg: SolverConfig, trace: Trace) -> list[int]:
    """Connected graph with minimum degree >= 3."""
    blocks = [sorted(b) for b in nx.biconnected_components(to_networkx(g))]
    if len(blocks) == 1:
        return _color_block(g, cfg, trace)
    parts = []
    for verts in sorted(blocks):
        h, ids = restrict(g, verts)
        sub = _color_any(h, cfg, trace)
        parts.append((verts, {v: sub[ids[v]] for v in verts}))
    merged = _merge_blocks(parts)
    return [merged[v] for v in range(g.n)]


def _color_any(g: RotationGraph, cfg: SolverConfig, trace: Trace) -> list[int]:
    col = [0] * g.n
    for comp in components(g):
        if len(comp) == 1:
            col[comp[0]] = 1
            continue
        h, ids = restrict(g, comp)
        if min(h.degree(v) for v in range(h.n)) <= 2:
            sub = _color_connected(h, cfg, trace)
        else:
            sub = _color_core(h, cfg, trace)
        for v in comp:
            col[v] = sub[ids[v]]
    return col


def three_color(g: RotationGraph, cfg: SolverConfig = SolverConfig()) -> tuple[list[int], Trace]:
    """Proper 3-colouring of a triangle-free plane graph."""
    tri = find_triangle(g)
    if tri is not None:
        raise TriangleFound(tri)
    trace = Trace()
    col = _color_any(g, cfg, trace)
    bad = first_violation(g, col)
    if bad is not None:
        raise RuntimeError(f"three_color produced an invalid colouring at {bad}")
    return col, trace


def extend_colors(g: RotationGraph, colors: Mapping[int, int] | Sequence[int],
                  cfg: SolverConfig = SolverConfig()) -> list[int]:
    """Convenience wrapper: build the pair from a colouring of the outer cycle."""
    from .validity import make_pair

    col, _ = extend(make_pair(g, colors), cfg)
    return col
