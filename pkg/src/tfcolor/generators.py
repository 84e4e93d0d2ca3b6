"""Triangle-free plane graph generators and the test corpus."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import SpecOutOfRange
from .planar import (
    RotationGraph,
    add_edge_in_face,
    build,
    from_coordinates,
    glue_at_vertex,
    subdivide_edge,
    suppress_vertex,
)

FAMILIES = ("cycle", "prism", "grid", "hexpatch", "cube", "dodecahedron",
            "random_insertion", "random_chorded", "random_core", "rings", "hang")


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: tuple[int, ...] = ()
    seed: int = 0

    def manifest_line(self) -> str:
        params = ",".join(map(str, self.params)) or "-"
        return f"gen {self.family} {params} {self.seed}"

    @classmethod
    def from_manifest_line(cls, line: str) -> "GenSpec":
        tag, family, params, seed = line.split()
        if tag != "gen":
            raise ValueError(f"not a manifest line: {line!r}")
        ps = () if params == "-" else tuple(int(p) for p in params.split(","))
        return cls(family, ps, int(seed))


def cycle(n: int) -> RotationGraph:
    if n < 4:
        raise SpecOutOfRange("cycle needs n >= 4")
    return build([[(i + 1) % n, (i - 1) % n] for i in range(n)], (0, 1))


def _ring(k: int, radius: float, phase: float = 0.0):
    return [(radius * math.cos(phase + 2 * math.pi * i / k),
             radius * math.sin(phase + 2 * math.pi * i / k)) for i in range(k)]


def prism(n: int) -> RotationGraph:
    if n < 4:
        raise SpecOutOfRange("prism needs n >= 4")
    coords = _ring(n, 2.0) + _ring(n, 1.0)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return from_coordinates(2 * n, edges, coords)


def rings(k: int, r: int) -> RotationGraph:
    """``r`` concentric ``k``-cycles with spokes between neighbouring rings."""
    if k < 4 or r < 1:
        raise SpecOutOfRange("rings needs k >= 4 and r >= 1")
    coords = [pt for j in range(r) for pt in _ring(k, float(r - j))]
    edges = [(j * k + i, j * k + (i + 1) % k) for j in range(r) for i in range(k)]
    edges += [(j * k + i, (j + 1) * k + i) for j in range(r - 1) for i in range(k)]
    return from_coordinates(k * r, edges, coords)


def hang(k: int, m: int) -> RotationGraph:
    """A ``k``-cycle with a copy of ``prism(m)`` attached inside at one vertex."""
    if k < 4 or m < 4:
        raise SpecOutOfRange("hang needs k >= 4 and m >= 4")
    host = cycle(k)
    inner = next(f for f in host.faces if host.face_index(host.outer) != host.faces.index(f))
    g, _ = glue_at_vertex(host, 0, inner, prism(m), 0)
    return g


def cube() -> RotationGraph:
    return prism(4)


def grid(a: int, b: int) -> RotationGraph:
    if a < 2 or b < 2:
        raise SpecOutOfRange("grid needs a, b >= 2")
    idx = lambda i, j: i * b + j
    coords = [(float(j), float(-i)) for i in range(a) for j in range(b)]
    edges = [(idx(i, j), idx(i, j + 1)) for i in range(a) for j in range(b - 1)]
    edges += [(idx(i, j), idx(i + 1, j)) for i in range(a - 1) for j in range(b)]
    return from_coordinates(a * b, edges, coords)


def hexpatch(r: int) -> RotationGraph:
    """Honeycomb patch: all hexagons within hex-distance ``r - 1`` of a centre hexagon."""
    if r < 1:
        raise SpecOutOfRange("hexpatch needs r >= 1")
    R = r - 1
    corners: dict[tuple[float, float], int] = {}
    pts: list[tuple[float, float]] = []
    edges: set[tuple[int, int]] = set()
    centres = [(q, s) for q in range(-R, R + 1) for s in range(-R, R + 1) if abs(q + s) <= R]
    for q, s in centres:
        cx, cy = math.sqrt(3) * (q + s / 2), 1.5 * s
        ring = []
        for k in range(6):
            ang = math.pi / 6 + k * math.pi / 3
            key = (round(cx + math.cos(ang), 6), round(cy + math.sin(ang), 6))
            if key not in corners:
                corners[key] = len(pts)
                pts.append(key)
            ring.append(corners[key])
        for k in range(6):
            u, v = ring[k], ring[(k + 1) % 6]
            edges.add((min(u, v), max(u, v)))
    # relabel by position so ids do not depend on hexagon visiting order
    order = sorted(range(len(pts)), key=lambda i: (-pts[i][1], pts[i][0]))
    new = {old: k for k, old in enumerate(order)}
    coords = [pts[i] for i in order]
    return from_coordinates(len(pts), sorted((new[u], new[v]) for u, v in edges), coords)


def dodecahedron() -> RotationGraph:
    # outer pentagon 0-4, middle 10-cycle 5-14, inner pentagon 15-19
    coords = _ring(5, 3.0) + _ring(10, 2.0) + _ring(5, 1.0, math.pi / 5)
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + k, 5 + (k + 1) % 10) for k in range(10)]
    edges += [(15 + j, 15 + (j + 1) % 5) for j in range(5)]
    edges += [(i, 5 + 2 * i) for i in range(5)]
    edges += [(15 + j, 5 + 2 * j + 1) for j in range(5)]
    return from_coordinates(20, edges, coords)


def _split_candidates(g: RotationGraph, f, min_dist: int, no_common: bool):
    verts = f.vertices
    L = len(verts)
    out = []
    for i in range(L):
        for j in range(i + 1, L):
            d = j - i
            u, w = verts[i], verts[j]
            if min(d, L - d) < min_dist or u == w or g.has_edge(u, w):
                continue
            if no_common and set(g.rot[u]) & set(g.rot[w]):
                continue
            out.append((u, w))
    return out


def random_insertion(n: int, seed: int) -> RotationGraph:
    """Grow a 5-cycle by inserting paths of length 2 or 3 across random faces."""
    if n < 5:
        raise SpecOutOfRange("random_insertion needs n >= 5")
    rng = np.random.Generator(np.random.PCG64(seed))
    g = cycle(5)
    while g.n < n:
        faces = g.faces
        for fi in rng.permutation(len(faces)):
            f = faces[fi]
            cand = _split_candidates(g, f, 2, no_common=False)
            if cand:
                break
        else:  # pragma: no cover - every face of length >= 4 has a candidate
            raise RuntimeError("no face admits a path insertion")
        u, w = cand[rng.integers(len(cand))]
        inner = min(int(rng.integers(1, 3)), n - g.n)
        g = add_edge_in_face(g, u, w, f)
        g = subdivide_edge(g, u, w, inner)
    return g


def random_chorded(n: int, seed: int) -> RotationGraph:
    """``random_insertion`` followed by random chords until no face admits one.

    A chord joins two vertices at face distance >= 3 without a common
    neighbour, so both new faces have length >= 4 and no triangle appears.
    The result has far fewer degree-2 vertices than plain insertion.
    """
    g = random_insertion(n, seed)
    rng = np.random.Generator(np.random.PCG64([seed, 1]))
    while True:
        options = [(f, uw) for f in g.faces for uw in _split_candidates(g, f, 3, no_common=True)]
        if not options:
            return g
        f, (u, w) = options[rng.integers(len(options))]
        g = add_edge_in_face(g, u, w, f)


def random_core(n: int, seed: int) -> RotationGraph:
    """``random_chorded`` with degree-2 vertices suppressed while that stays triangle-free.

    Suppressing v (path u-v-w becomes the edge uw) needs u, w non-adjacent
    with no common neighbour besides v; chords are re-saturated after each
    step.  The result is usually smaller than ``n`` and mostly of minimum
    degree three.
    """
    g = random_chorded(n, seed)
    rng = np.random.Generator(np.random.PCG64([seed, 2]))
    while g.n > 6:
        cand = []
        for v in range(g.n):
            if g.degree(v) != 2:
                continue
            u, w = g.rot[v]
            if not g.has_edge(u, w) and set(g.rot[u]) & set(g.rot[w]) == {v}:
                cand.append(v)
        if not cand:
            break
        g, _ = suppress_vertex(g, cand[rng.integers(len(cand))])
        while True:
            options = [(f, uw) for f in g.faces
                       for uw in _split_candidates(g, f, 3, no_common=True)]
            if not options:
                break
            f, (u, w) = options[rng.integers(len(options))]
            g = add_edge_in_face(g, u, w, f)
    return g


def generate(spec: GenSpec) -> RotationGraph:
    fam, p = spec.family, spec.params
    try:
        if fam == "cycle":
            return cycle(*p)
        if fam == "prism":
            return prism(*p)
        if fam == "grid":
            return grid(*p)
        if fam == "hexpatch":
            return hexpatch(*p)
        if fam == "cube":
            return cube()
        if fam == "dodecahedron":
            return dodecahedron()
        if fam == "random_insertion":
            return random_insertion(*p, spec.seed)
        if fam == "random_chorded":
            return random_chorded(*p, spec.seed)
        if fam == "random_core":
            return random_core(*p, spec.seed)
        if fam == "rings":
            return rings(*p)
        if fam == "hang":
            return hang(*p)
    except TypeError as exc:
        raise SpecOutOfRange(f"bad parameters {p} for {fam}: {exc}") from None
    raise SpecOutOfRange(f"unknown family {fam!r}")


def named_specs() -> list[GenSpec]:
    specs = [GenSpec("cycle", (n,)) for n in range(4, 13)]
    specs += [GenSpec("prism", (n,)) for n in range(4, 9)]
    specs += [GenSpec("grid", (a, b)) for a in range(2, 5) for b in range(2, 5)]
    specs += [GenSpec("hexpatch", (r,)) for r in (1, 2)]
    specs += [GenSpec("cube"), GenSpec("dodecahedron")]
    return specs


def corpus_specs(sizes=range(8, 17), seeds: int = 200, family: str = "random_insertion"
                 ) -> list[GenSpec]:
    return named_specs() + [GenSpec(family, (n,), s) for n in sizes for s in range(seeds)]


def corpus(specs=None) -> Iterator[tuple[GenSpec, RotationGraph]]:
    for spec in corpus_specs() if specs is None else specs:
        yield spec, generate(spec)
