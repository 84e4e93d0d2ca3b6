"""Reducible configurations for precolouring extension on triangle-free plane graphs.

Each configuration is found by a ``detect_*`` function that looks only at the
graph (never at colours), turned into a :class:`Reduction` by ``apply_*``, and
undone by :meth:`Reduction.lift`.  Detectors are tried in the fixed order
R1, R2, R3, R4, R5, R6; later ones rely on the earlier ones having found
nothing, and any situation that order rules out raises
:class:`~tfcolor.errors.ProofOrderViolation`.

Child 0 of every reduction inherits the parent's outer cycle and colouring.
A second child (R2, R4 with a separating cycle) is the disk inside the cut
cycle and is coloured on that cycle by child 0's solution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Mapping, Sequence

from .errors import EmbeddingError, ProofOrderViolation
from .planar import (
    RotationGraph,
    _compact,
    _dedupe_cyclic,
    add_edge_in_face,
    cycle_darts,
    cut_vertices,
    cycle_sides,
    delete_vertices,
    facial_direction,
    find_short_cycles,
    find_triangle,
    identify_in_face,
    is_facial,
    is_induced,
    split_at_cycle,
)
from .validity import (
    BoundaryColoring,
    is_valid_boundary,
    outer_shape_problem,
    pair_less,
)


class Kind(str, Enum):
    R1 = "R1_InteriorLowDegree"
    R2 = "R2_SeparatingShortCycle"
    R3 = "R3_CutRepair"
    R4 = "R4_InducedSixCycle"
    R5 = "R5_FourCycle"
    R5T = "R5t_Terminal"
    R6 = "R6_Pentagon"

    @property
    def short(self) -> str:
        return self.value.split("_")[0]


@dataclass(frozen=True)
class Reduction:
    kind: Kind
    parent: RotationGraph
    verts: tuple[int, ...]
    children: tuple[RotationGraph, ...] = ()
    maps: tuple[Mapping[int, int], ...] = ()
    data: dict = field(default_factory=dict, compare=False)

    def child_boundary(self, i: int, phi: Mapping[int, int],
                       first: Sequence[int] | None = None) -> BoundaryColoring:
        """Boundary colouring of child ``i``.

        ``phi`` colours the parent's outer cycle; ``first`` is child 0's
        colouring, needed for child 1.
        """
        child, fwd = self.children[i], self.maps[i]
        back: dict[int, int] = {}
        for p, c in fwd.items():
            if c not in back or p in phi:
                back[c] = p
        cyc = child.outer_cycle
        if i == 0:
            cols = tuple(phi[back[y]] for y in cyc)
        else:
            m0 = self.maps[0]
            cols = tuple(first[m0[back[y]]] for y in cyc)
        return BoundaryColoring(cyc, cols)

    def lift(self, phi: Mapping[int, int], colorings: Sequence[Sequence[int]]) -> list[int]:
        """Parent colouring from the children's colourings."""
        g = self.parent
        col = [0] * g.n
        for v, c in phi.items():
            col[v] = c
        for fwd, cc in zip(self.maps, colorings):
            for p, c in fwd.items():
                col[p] = cc[c]
        _COMPLETE.get(self.kind, _no_completion)(self, phi, col)
        for v, c in phi.items():
            if col[v] != c:
                raise RuntimeError(f"{self.kind.short} lift changed boundary vertex {v}")
        for u, v in g.edges():
            if col[u] == col[v]:
                raise RuntimeError(f"{self.kind.short} lift produced a monochromatic edge {u}-{v}")
        return col


def _no_completion(red, phi, col):
    missing = [v for v, c in enumerate(col) if c == 0]
    if missing:
        raise RuntimeError(f"{red.kind.short} lift left vertices {missing} uncoloured")


def smallest_free(used) -> int:
    for c in (1, 2, 3):
        if c not in used:
            return c
    raise RuntimeError("no free colour")


def _outer_set(g: RotationGraph) -> set[int]:
    return set(g.outer_cycle)


def _check_child(parent: RotationGraph, child: RotationGraph, what: str) -> None:
    if not pair_less((child.n, child.m), (parent.n, parent.m)):
        raise ProofOrderViolation(f"{what}: child ({child.n},{child.m}) is not smaller "
                                  f"than parent ({parent.n},{parent.m})")
    why = outer_shape_problem(child)
    if why:
        raise ProofOrderViolation(f"{what}: child outer face invalid ({why})")
    tri = find_triangle(child)
    if tri:
        raise ProofOrderViolation(f"{what}: child contains triangle {tri}")


def _canon_key(cycle: Sequence[int]):
    return tuple(sorted(cycle)), tuple(cycle)


# ---------------------------------------------------------------------------
# R1: interior vertex of degree <= 2


def _connected_without(g: RotationGraph, v: int) -> bool:
    nbrs = g.rot[v]
    if len(nbrs) <= 1:
        return True
    seen = {v, nbrs[0]}
    stack = [nbrs[0]]
    while stack:
        x = stack.pop()
        for y in g.rot[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == g.n


def detect_R1(g: RotationGraph) -> tuple[int] | None:
    """Smallest interior vertex of degree <= 2 whose removal keeps G connected."""
    outer = _outer_set(g)
    for v in range(g.n):
        if v not in outer and g.degree(v) <= 2 and _connected_without(g, v):
            return (v,)
    return None


def apply_R1(g: RotationGraph, v: int) -> Reduction:
    child, ids = delete_vertices(g, [v])
    red = Reduction(Kind.R1, g, (v,), (child,), (ids,))
    _check_child(g, child, "R1")
    return red


def _complete_R1(red, phi, col):
    v = red.verts[0]
    col[v] = smallest_free({col[u] for u in red.parent.rot[v]})


# ---------------------------------------------------------------------------
# R2: separating cycle of length 4 or 5


def detect_R2(g: RotationGraph) -> tuple[int, ...] | None:
    found = [K for K in find_short_cycles(g, 5) if not is_facial(g, K)]
    return min(found, key=_canon_key) if found else None


def apply_R2(g: RotationGraph, *cycle: int) -> Reduction:
    (out, omap), (ins, imap) = split_at_cycle(g, cycle)
    _check_child(g, out, "R2 outside")
    _check_child(g, ins, "R2 inside")
    return Reduction(Kind.R2, g, tuple(cycle), (out, ins), (omap, imap))


# ---------------------------------------------------------------------------
# R3: cut vertex; join the two sides across a common face


def _components_without(g: RotationGraph, c: int) -> list[set[int]]:
    comps, seen = [], {c}
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.rot[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def detect_R3(g: RotationGraph) -> tuple[int, int, int, int] | None:
    """(cut vertex c, v1 on C's side, v2 on the far side, face index), or None.

    The far side is a component of G - c containing no outer vertex.  Both
    endpoints sit two steps from ``c`` along the face at a corner of ``c``
    where the two sides meet, so the new edge creates no triangle.
    """
    cuts = cut_vertices(g)
    if not cuts:
        return None
    outer = _outer_set(g)
    c = cuts[0]
    far = min((comp for comp in _components_without(g, c) if not comp & outer), key=min)
    rot = g.rot[c]
    k = len(rot)
    for i in range(k):
        y1, x1 = rot[i], rot[(i + 1) % k]
        if y1 not in far and x1 in far:
            break
    else:  # pragma: no cover - c touches both sides
        raise ProofOrderViolation(f"R3: no corner of {c} between the two sides")
    if g.degree(x1) < 2 or g.degree(y1) < 2:
        raise ProofOrderViolation(f"R3: leaf next to cut vertex {c}; R1 should have fired")
    x2 = g.next_around(x1, c)
    y2 = g.next_around(y1, c, -1)
    return c, y2, x2, g.face_index((y1, c))


def apply_R3(g: RotationGraph, c: int, v1: int, v2: int, fi: int) -> Reduction:
    if g.has_edge(c, v1) or g.has_edge(c, v2) or v1 == v2:
        raise ProofOrderViolation(f"R3: {v1}, {v2} are not at distance two from {c}")
    child = add_edge_in_face(g, v1, v2, g.faces[fi])
    _check_child(g, child, "R3")
    ident = {v: v for v in range(g.n)}
    return Reduction(Kind.R3, g, (c, v1, v2), (child,), (ident,))


# ---------------------------------------------------------------------------
# R4: induced 6-cycle other than the outer cycle


def _outside_degrees(g: RotationGraph, K: Sequence[int]) -> dict[int, int]:
    """Degree of each vertex of K in the closed outer side of K."""
    if is_facial(g, K):
        return {v: g.degree(v) for v in K}
    side_a, side_b = cycle_sides(g, K)
    outer_side = side_a if g.face_index(g.outer) in side_a else side_b
    nbrs = {v: set() for v in K}
    for a, b in cycle_darts(K):
        nbrs[a].add(b)
        nbrs[b].add(a)
    for fi in outer_side:
        for a, b in g.faces[fi].darts:
            if a in nbrs:
                nbrs[a].add(b)
    return {v: len(s) for v, s in nbrs.items()}


def detect_R4(g: RotationGraph) -> tuple[int, ...] | None:
    """Induced 6-cycle K != C, rotated so K[0] is an interior vertex of least outside degree."""
    outer = _outer_set(g)
    found = [K for K in find_short_cycles(g, 6)
             if len(K) == 6 and set(K) != outer and is_induced(g, K)]
    if not found:
        return None
    K = min(found, key=_canon_key)
    deg = _outside_degrees(g, K)
    v1 = min((v for v in K if v not in outer), key=lambda v: (deg[v], v))
    i = K.index(v1)
    return tuple(K[i:] + K[:i])


def apply_R4(g: RotationGraph, *K: int) -> Reduction:
    v1, v4 = K[0], K[3]
    if is_facial(g, K):
        sign = facial_direction(g, K)
        seq = list(K) if sign > 0 else list(K)[::-1]
        face = g.faces[g.face_index((seq[0], seq[1]))]
        child = add_edge_in_face(g, v1, v4, face)
        parts = [(child, {v: v for v in range(g.n)})]
    else:
        (out, omap), (ins, imap) = split_at_cycle(g, K)
        Ko = [omap[v] for v in K]
        sign = facial_direction(out, Ko)
        seq = Ko if sign > 0 else Ko[::-1]
        face = out.faces[out.face_index((seq[0], seq[1]))]
        child = add_edge_in_face(out, omap[v1], omap[v4], face)
        parts = [(child, omap), (ins, imap)]
    tri = find_triangle(parts[0][0])
    if tri:
        raise ProofOrderViolation(f"R4: chord {v1}-{v4} of {K} creates triangle {tri}")
    _check_child(g, parts[0][0], "R4 outside")
    if len(parts) > 1:
        _check_child(g, parts[1][0], "R4 inside")
    return Reduction(Kind.R4, g, tuple(K), tuple(p[0] for p in parts),
                     tuple(p[1] for p in parts))


# ---------------------------------------------------------------------------
# R5: 4-face other than the outer face


def detect_R5(g: RotationGraph) -> tuple[int, int, int, int] | None:
    """4-face K = (v1, v2, v3, v4) in face order with v3 interior."""
    outer = _outer_set(g)
    ofi = g.face_index(g.outer)
    best = None
    for fi, f in enumerate(g.faces):
        if fi == ofi or f.length != 4 or len(set(f.vertices)) != 4:
            continue
        vs = f.vertices
        inner = [v for v in vs if v not in outer]
        if not inner:
            continue
        v3 = min(inner)
        i = vs.index(v3)
        lab = tuple(vs[(i + 2 + j) % 4] for j in range(4))
        if best is None or _canon_key(lab) < _canon_key(best):
            best = lab
    return best


def apply_R5(g: RotationGraph, v1: int, v2: int, v3: int, v4: int) -> Reduction:
    C = g.outer_cycle
    if v1 in C and len(C) == 6:
        i = C.index(v1)
        if g.has_edge(v3, C[(i + 3) % 6]):
            return _terminal_R5(g, v3)
    face = g.faces[g.face_index((v1, v2))]
    try:
        child, ids = identify_in_face(g, v1, v3, face, merge_parallel=True)
    except EmbeddingError as exc:
        raise ProofOrderViolation(f"R5: identifying {v1} and {v3} failed: {exc}") from None
    _check_child(g, child, "R5")
    return Reduction(Kind.R5, g, (v1, v2, v3, v4), (child,), (ids,))


def _terminal_R5(g: RotationGraph, v3: int) -> Reduction:
    C = g.outer_cycle
    if g.n != 7 or sorted(C.index(u) % 2 for u in g.rot[v3]) not in ([0, 0, 0], [1, 1, 1]):
        raise ProofOrderViolation(
            f"R5: outer 6-cycle gains a chord but G is not C plus a vertex on alternate "
            f"boundary vertices (n={g.n}, N({v3})={g.rot[v3]})")
    return Reduction(Kind.R5T, g, (v3,) + C)


def _complete_R5T(red, phi, col):
    v3, C = red.verts[0], red.verts[1:]
    nbrs = set(red.parent.rot[v3])
    for i, u in enumerate(C):
        if u not in nbrs and phi[u] != phi[C[(i + 3) % 6]]:
            col[v3] = phi[u]
            return
    raise RuntimeError("R5t: boundary colouring has no opposite pair with distinct colours")


# ---------------------------------------------------------------------------
# R6: 5-face with four consecutive interior degree-3 vertices


def detect_R6(g: RotationGraph) -> tuple[int, ...] | None:
    """(v1..v5, x1..x4) for the canonically first reducible 5-face, or None.

    v1..v4 are consecutive on the face, interior and of degree 3; x_i is the
    neighbour of v_i off the face, and no x_i lies on the outer cycle.
    """
    outer = _outer_set(g)
    ofi = g.face_index(g.outer)
    best = None
    for fi, f in enumerate(g.faces):
        vs = f.vertices
        if fi == ofi or f.length != 5 or len(set(vs)) != 5:
            continue
        for s in range(5):
            v5 = vs[s]
            quad = [vs[(s + 1 + j) % 5] for j in range(4)]
            if any(v in outer or g.degree(v) != 3 for v in quad):
                continue
            xs = [next(u for u in g.rot[v] if u not in vs) for v in quad]
            if any(x in outer for x in xs):
                continue
            cand = tuple(quad) + (v5,) + tuple(xs)
            key = (tuple(sorted(vs)), v5, tuple(quad))
            if best is None or key < best[0]:
                best = (key, cand)
    return best[1] if best else None


def apply_R6(g: RotationGraph, *cfg: int) -> Reduction:
    v1, v2, v3, v4, v5, x1, x2, x3, x4 = cfg
    if len({x1, x2, x3, x4, v5}) != 5:
        raise ProofOrderViolation(f"R6: outside neighbours {x1, x2, x3, x4} not distinct")
    if g.has_edge(x1, x4):
        raise ProofOrderViolation(f"R6: {x1} and {x4} already adjacent")
    quad = {v1, v2, v3, v4}
    rot = {v: list(g.rot[v]) for v in range(g.n)}
    rot[x1] = [x4 if u == v1 else u for u in rot[x1]]
    rot[x4] = [x1 if u == v4 else u for u in rot[x4]]
    r3 = rot[x3]
    i = r3.index(v3)
    merged = []
    for u in rot[x2]:
        merged.extend(r3[i + 1:] + r3[:i] if u == v2 else [u])
    rot[x2] = merged
    new_rot: dict[int, list[int]] = {}
    for v in range(g.n):
        if v in quad or v == x3:
            continue
        new_rot[v] = [x2 if u == x3 else u for u in rot[v] if u not in quad]
    for v, r in new_rot.items():
        if len(set(r)) != len(r):
            r = _dedupe_cyclic(r)
            if len(set(r)) != len(r):
                raise ProofOrderViolation(f"R6: merging {x2} and {x3} leaves parallel edges at {v}")
            new_rot[v] = r
    compact, outer, ids = _compact(new_rot, g.outer)
    try:
        child = RotationGraph(compact, outer)
    except EmbeddingError as exc:
        raise ProofOrderViolation(f"R6: reduced embedding invalid: {exc}") from None
    mapping = {v: ids[v] for v in new_rot}
    mapping[x3] = ids[x2]
    _check_child(g, child, "R6")
    return Reduction(Kind.R6, g, tuple(cfg), (child,), (mapping,))


def r6_completion(cx1: int, cx2: int, cx3: int, cx4: int, cv5: int):
    """Colours (v1, v2, v3, v4) around the pentagon, smallest-first, or None."""
    for c1 in (1, 2, 3):
        if c1 in (cx1, cv5):
            continue
        for c4 in (1, 2, 3):
            if c4 in (cx4, cv5) or c4 == c1:
                continue
            for c2 in (1, 2, 3):
                if c2 in (c1, cx2):
                    continue
                for c3 in (1, 2, 3):
                    if c3 not in (c2, cx3, c4):
                        return c1, c2, c3, c4
    return None


def _complete_R6(red, phi, col):
    v1, v2, v3, v4, v5, x1, x2, x3, x4 = red.verts
    got = r6_completion(col[x1], col[x2], col[x3], col[x4], col[v5])
    if got is None:
        raise RuntimeError(f"R6: no completion for x=({col[x1]},{col[x2]},{col[x3]},{col[x4]}) "
                           f"v5={col[v5]}")
    col[v1], col[v2], col[v3], col[v4] = got


_COMPLETE: dict[Kind, Callable] = {
    Kind.R1: _complete_R1,
    Kind.R5T: _complete_R5T,
    Kind.R6: _complete_R6,
}


# ---------------------------------------------------------------------------
# dispatch

DETECTORS = (
    (Kind.R1, detect_R1, apply_R1),
    (Kind.R2, detect_R2, apply_R2),
    (Kind.R3, detect_R3, apply_R3),
    (Kind.R4, detect_R4, apply_R4),
    (Kind.R5, detect_R5, apply_R5),
    (Kind.R6, detect_R6, apply_R6),
)


def detect(g: RotationGraph) -> tuple[Kind, tuple[int, ...]] | None:
    """First configuration in priority order."""
    for kind, det, _ in DETECTORS:
        hit = det(g)
        if hit is not None:
            return kind, tuple(hit)
    return None


def apply(g: RotationGraph, kind: Kind, params: Sequence[int]) -> Reduction:
    for k, _, app in DETECTORS:
        if k == kind or (kind == Kind.R5T and k == Kind.R5):
            return app(g, *params)
    raise ValueError(f"unknown reduction {kind}")


def reduce_once(g: RotationGraph) -> Reduction | None:
    hit = detect(g)
    return None if hit is None else apply(g, *hit)


def check_child_boundary(red: Reduction, b: BoundaryColoring) -> None:
    if not is_valid_boundary(b):
        raise ProofOrderViolation(f"{red.kind.short}: child boundary {b.colors} is not valid")
