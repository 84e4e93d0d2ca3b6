"""Rotation-system representation of plane graphs.

A plane graph is stored as a clockwise cyclic order of neighbours around each
vertex plus one designated dart whose face is the outer face.  Faces are the
orbits of the face-successor map

    (u, v) -> (v, w),  w = cyclic successor of u in rotation(v).

Every constructor validates the rotation (symmetry, simplicity and the sphere
condition V - E + F = 2 per connected component), so a ``RotationGraph`` that
exists is always a genus-0 embedding.  Surgeries return new graphs and never
mutate their input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import networkx as nx

from .errors import (
    AlreadyAdjacent,
    Asymmetric,
    BadOuterDart,
    EmbeddingError,
    FacialCycle,
    Loop,
    MultiEdge,
    NotOnFace,
    NotSphere,
    WouldCreateMultiEdge,
)

Dart = tuple[int, int]


@dataclass(frozen=True)
class FaceWalk:
    """One orbit of the face-successor map, starting at its smallest dart."""

    darts: tuple[Dart, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(d[0] for d in self.darts)

    def corner(self, v: int) -> tuple[int, int]:
        """(in-neighbour, out-neighbour) at the first occurrence of ``v``."""
        L = len(self.darts)
        for i, (a, b) in enumerate(self.darts):
            if b == v:
                return a, self.darts[(i + 1) % L][1]
        raise NotOnFace(f"vertex {v} is not on face {self.vertices}")

    def __len__(self) -> int:
        return len(self.darts)


class RotationGraph:
    """Immutable simple plane graph given by a rotation system.

    Parameters
    ----------
    rot : sequence of sequences
        ``rot[v]`` lists the neighbours of ``v`` in clockwise order.
    outer : dart or None
        A dart on the outer face; may be ``None`` only for edgeless graphs.
    """

    __slots__ = ("rot", "outer", "_pos", "_faces", "_face_of", "_hash")

    def __init__(self, rot: Sequence[Sequence[int]], outer: Dart | None = None):
        self.rot = tuple(tuple(int(x) for x in r) for r in rot)
        self.outer = None if outer is None else (int(outer[0]), int(outer[1]))
        self._faces = None
        self._face_of = None
        self._hash = None
        self._validate()

    # -- validation -----------------------------------------------------

    def _validate(self) -> None:
        n = len(self.rot)
        pos = []
        for v, r in enumerate(self.rot):
            p = {}
            for i, u in enumerate(r):
                if not 0 <= u < n:
                    raise EmbeddingError(f"rotation of {v} mentions unknown vertex {u}")
                if u == v:
                    raise Loop(f"loop at vertex {v}")
                if u in p:
                    raise MultiEdge(f"vertex {u} appears twice in the rotation of {v}")
                p[u] = i
            pos.append(p)
        self._pos = tuple(pos)
        for v in range(n):
            for u in self.rot[v]:
                if v not in pos[u]:
                    raise Asymmetric(v, u)
        if self.outer is None:
            if self.m:
                raise BadOuterDart("graphs with edges need an outer dart")
        elif not self.has_edge(*self.outer):
            raise BadOuterDart(f"outer dart {self.outer} is not an edge")
        self._check_sphere()

    def _check_sphere(self) -> None:
        faces = self.faces
        comp = component_labels(self)
        nv: dict[int, int] = {}
        ne: dict[int, int] = {}
        nf: dict[int, int] = {}
        for v in range(self.n):
            c = comp[v]
            nv[c] = nv.get(c, 0) + 1
            ne[c] = ne.get(c, 0) + len(self.rot[v])
        for f in faces:
            c = comp[f.darts[0][0]]
            nf[c] = nf.get(c, 0) + 1
        for c in nv:
            e = ne[c] // 2
            chi = nv[c] - e + (nf.get(c, 0) if e else 1)
            if chi != 2:
                raise NotSphere(
                    f"component with V={nv[c]}, E={e}, F={nf.get(c, 0)} has V-E+F={chi}"
                )

    # -- basic queries --------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rot)

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rot) // 2

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rot[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._pos[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.rot[u] if u < v]

    def darts(self) -> list[Dart]:
        return [(u, v) for u in range(self.n) for v in sorted(self.rot[u])]

    def succ(self, dart: Dart) -> Dart:
        u, v = dart
        r = self.rot[v]
        return v, r[(self._pos[v][u] + 1) % len(r)]

    def next_around(self, v: int, u: int, step: int = 1) -> int:
        """Neighbour of ``v`` that is ``step`` places clockwise after ``u``."""
        r = self.rot[v]
        return r[(self._pos[v][u] + step) % len(r)]

    # -- faces ------------------------------------------------------------

    @property
    def faces(self) -> tuple[FaceWalk, ...]:
        if self._faces is None:
            seen: dict[Dart, int] = {}
            faces = []
            for d in self.darts():
                if d in seen:
                    continue
                walk = []
                e = d
                while e not in seen:
                    seen[e] = len(faces)
                    walk.append(e)
                    e = self.succ(e)
                faces.append(FaceWalk(tuple(walk)))
            self._faces = tuple(faces)
            self._face_of = seen
        return self._faces

    def face_index(self, dart: Dart) -> int:
        self.faces
        return self._face_of[dart]

    @property
    def outer_face(self) -> FaceWalk | None:
        if self.outer is None:
            return None
        return self.faces[self.face_index(self.outer)]

    @property
    def outer_cycle(self) -> tuple[int, ...]:
        """Vertices of the outer face walk, in walk order from the outer dart."""
        if self.outer is None:
            return ()
        walk, d = [], self.outer
        while True:
            walk.append(d[0])
            d = self.succ(d)
            if d == self.outer:
                return tuple(walk)

    # -- value semantics ------------------------------------------------

    def _key(self):
        return self.rot, self.outer

    def __eq__(self, other):
        return isinstance(other, RotationGraph) and self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        return f"RotationGraph(n={self.n}, m={self.m}, outer={self.outer})"


# ---------------------------------------------------------------------------
# construction


def build(rotations: Mapping[int, Sequence[int]] | Sequence[Sequence[int]],
          outer: Dart | None = None) -> RotationGraph:
    """Validate and wrap a rotation system.

    ``rotations`` is either a sequence indexed by vertex or a mapping with keys
    ``0..n-1``.
    """
    if isinstance(rotations, Mapping):
        n = len(rotations)
        if set(rotations) != set(range(n)):
            raise EmbeddingError("vertex ids must be 0..n-1")
        rotations = [rotations[v] for v in range(n)]
    return RotationGraph(rotations, outer)


def from_coordinates(n: int, edges: Iterable[tuple[int, int]],
                     coords: Sequence[tuple[float, float]]) -> RotationGraph:
    """Embed a straight-line drawing; the unbounded face becomes the outer face."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    rot = []
    for v in range(n):
        x0, y0 = coords[v]
        rot.append(sorted(adj[v], key=lambda u: -math.atan2(coords[u][1] - y0, coords[u][0] - x0)))
    if not any(rot):
        return RotationGraph(rot, None)
    first = next((v, r[0]) for v, r in enumerate(rot) if r)
    g = RotationGraph(rot, first)

    def area(f: FaceWalk) -> float:
        return sum(coords[a][0] * coords[b][1] - coords[b][0] * coords[a][1] for a, b in f.darts)

    outer = max(g.faces, key=lambda f: abs(area(f)))
    return RotationGraph(g.rot, outer.darts[0])


def reroot(g: RotationGraph, dart: Dart) -> RotationGraph:
    """Same embedding, different outer face."""
    return RotationGraph(g.rot, dart)


def trace_faces(g: RotationGraph) -> list[FaceWalk]:
    return list(g.faces)


def degree(g: RotationGraph, v: int) -> int:
    return g.degree(v)


# ---------------------------------------------------------------------------
# structural queries


def component_labels(g: RotationGraph) -> list[int]:
    label = [-1] * g.n
    c = 0
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = c
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.rot[v]:
                if label[u] < 0:
                    label[u] = c
                    stack.append(u)
        c += 1
    return label


def components(g: RotationGraph) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(component_labels(g)):
        groups.setdefault(c, []).append(v)
    return list(groups.values())


def is_connected(g: RotationGraph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def to_networkx(g: RotationGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def cut_vertices(g: RotationGraph) -> list[int]:
    return sorted(nx.articulation_points(to_networkx(g)))


def is_two_connected(g: RotationGraph) -> bool:
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def find_triangle(g: RotationGraph) -> tuple[int, int, int] | None:
    for u in range(g.n):
        nu = set(g.rot[u])
        for v in g.rot[u]:
            if v <= u:
                continue
            for w in g.rot[v]:
                if w > v and w in nu:
                    return u, v, w
    return None


def contains_triangle(g: RotationGraph) -> bool:
    return find_triangle(g) is not None


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect so the cycle starts at its minimum towards the smaller neighbour."""
    c = list(cycle)
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[:0:-1]
    return tuple(c)


def find_short_cycles(g: RotationGraph, max_len: int) -> list[tuple[int, ...]]:
    """All cycles of length <= ``max_len``, each once, in canonical form and order."""
    if not 3 <= max_len <= 6:
        raise ValueError("max_len must be in 3..6")
    out = []
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def grow():
            v = path[-1]
            for u in g.rot[v]:
                if u == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif u > s and u not in on_path and len(path) < max_len:
                    path.append(u)
                    on_path.add(u)
                    grow()
                    path.pop()
                    on_path.discard(u)

        grow()
    return sorted(out, key=lambda c: (len(c), c))


def cycle_darts(cycle: Sequence[int]) -> list[Dart]:
    k = len(cycle)
    return [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def _check_cycle(g: RotationGraph, cycle: Sequence[int]) -> None:
    if len(set(cycle)) != len(cycle) or len(cycle) < 3:
        raise EmbeddingError(f"{tuple(cycle)} is not a cycle")
    for a, b in cycle_darts(cycle):
        if not g.has_edge(a, b):
            raise EmbeddingError(f"{tuple(cycle)} is not a cycle: missing edge {a}-{b}")


def facial_direction(g: RotationGraph, cycle: Sequence[int]) -> int:
    """+1 / -1 if the cycle traversed forwards / backwards is a face, else 0."""
    _check_cycle(g, cycle)
    for sign, seq in ((1, list(cycle)), (-1, list(cycle)[::-1])):
        ds = cycle_darts(seq)
        f = g.faces[g.face_index(ds[0])]
        if f.length == len(ds) and set(f.darts) == set(ds):
            return sign
    return 0


def is_facial(g: RotationGraph, cycle: Sequence[int]) -> bool:
    return facial_direction(g, cycle) != 0


def is_induced(g: RotationGraph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    idx = {v: i for i, v in enumerate(cycle)}
    for i, v in enumerate(cycle):
        for u in g.rot[v]:
            j = idx.get(u)
            if j is not None and (j - i) % k not in (1, k - 1):
                return False
    return True


# ---------------------------------------------------------------------------
# surgeries


def _compact(rot: dict[int, list[int]], outer: Dart | None):
    """Relabel surviving vertex ids to 0..k-1 preserving order."""
    old = sorted(rot)
    new_id = {v: i for i, v in enumerate(old)}
    new_rot = [[new_id[u] for u in rot[v]] for v in old]
    if outer is not None:
        outer = (new_id[outer[0]], new_id[outer[1]])
    return new_rot, outer, new_id


def _fallback_outer(rot: dict[int, list[int]], outer: Dart | None) -> Dart | None:
    if outer is not None and outer[0] in rot and outer[1] in rot.get(outer[0], ()):
        return outer
    darts = sorted((v, u) for v in rot for u in rot[v])
    return darts[0] if darts else None


def restrict(g: RotationGraph, keep: Iterable[int],
             edge_ok=None, outer: Dart | None = None) -> tuple[RotationGraph, dict[int, int]]:
    """Sub-embedding on ``keep`` (optionally filtering edges); returns (graph, old->new)."""
    keep = set(keep)
    rot = {}
    for v in sorted(keep):
        rot[v] = [u for u in g.rot[v] if u in keep and (edge_ok is None or edge_ok(v, u))]
    o = _fallback_outer(rot, g.outer if outer is None else outer)
    new_rot, o, ids = _compact(rot, o)
    return RotationGraph(new_rot, o), ids


def delete_vertices(g: RotationGraph, vertices: Iterable[int]) -> tuple[RotationGraph, dict[int, int]]:
    """Remove ``vertices``; ids are compacted and the old->new map returned.

    The outer dart is kept when it survives, otherwise the smallest dart is used.
    """
    drop = set(vertices)
    return restrict(g, [v for v in range(g.n) if v not in drop])


def _on_face(f: FaceWalk, *vs: int) -> None:
    verts = set(f.vertices)
    for v in vs:
        if v not in verts:
            raise NotOnFace(f"vertex {v} is not on face {f.vertices}")


def add_edge_in_face(g: RotationGraph, u: int, w: int, f: FaceWalk) -> RotationGraph:
    """Insert edge ``uw`` through face ``f``, splitting it in two."""
    _on_face(f, u, w)
    if u == w:
        raise Loop(f"cannot join {u} to itself")
    if g.has_edge(u, w):
        raise AlreadyAdjacent(f"{u} and {w} are already adjacent")
    rot = [list(r) for r in g.rot]
    for x, y in ((u, w), (w, u)):
        a, _ = f.corner(x)
        rot[x].insert(g._pos[x][a] + 1, y)
    return RotationGraph(rot, g.outer)


def subdivide_edge(g: RotationGraph, u: int, w: int, count: int = 1) -> RotationGraph:
    """Replace edge ``uw`` by a path through ``count`` new vertices (ids n, n+1, ...)."""
    if not g.has_edge(u, w):
        raise EmbeddingError(f"{u}-{w} is not an edge")
    rot = [list(r) for r in g.rot]
    path = [u] + list(range(g.n, g.n + count)) + [w]
    rot[u][g._pos[u][w]] = path[1]
    rot[w][g._pos[w][u]] = path[-2]
    for i in range(1, len(path) - 1):
        rot.append([path[i - 1], path[i + 1]])
    outer = g.outer
    if outer in ((u, w), (w, u)):
        outer = (outer[0], path[1] if outer[0] == u else path[-2])
    return RotationGraph(rot, outer)


def _dedupe_cyclic(seq: list[int]) -> list[int]:
    out = [x for i, x in enumerate(seq) if x != seq[i - 1]] if len(seq) > 1 else list(seq)
    if not out and seq:
        out = [seq[0]]
    return out


def identify_in_face(g: RotationGraph, u: int, w: int, f: FaceWalk,
                     merge_parallel: bool = False) -> tuple[RotationGraph, dict[int, int]]:
    """Pinch face ``f`` so that ``u`` and ``w`` become one vertex.

    The merged vertex takes id ``min(u, w)`` before compaction; its rotation is
    the rotation of ``u`` read from its out-neighbour on ``f`` followed by that
    of ``w``.  Common neighbours would produce parallel edges: with
    ``merge_parallel`` false this raises ``WouldCreateMultiEdge``; with it true
    each parallel pair must bound an empty digon, which is collapsed.
    """
    _on_face(f, u, w)
    if u == w:
        raise EmbeddingError("cannot identify a vertex with itself")
    if g.has_edge(u, w):
        raise AlreadyAdjacent(f"{u} and {w} are adjacent")
    common = set(g.rot[u]) & set(g.rot[w])
    if common and not merge_parallel:
        raise WouldCreateMultiEdge(f"{u} and {w} share neighbours {sorted(common)}")

    def from_out(x: int) -> list[int]:
        _, b = f.corner(x)
        r = g.rot[x]
        i = g._pos[x][b]
        return list(r[i:] + r[:i])

    keep, gone = min(u, w), max(u, w)
    merged = from_out(u) + from_out(w)
    rot: dict[int, list[int]] = {}
    for v in range(g.n):
        if v in (u, w):
            continue
        rot[v] = [keep if x == gone else x for x in g.rot[v]]
    rot[keep] = merged
    touched = [keep] + sorted(common)
    for v in touched:
        if merge_parallel:
            rot[v] = _dedupe_cyclic(rot[v])
        if len(set(rot[v])) != len(rot[v]):
            raise WouldCreateMultiEdge(
                f"identifying {u} and {w} leaves a non-facial parallel pair at {v}")
    outer = g.outer
    if outer is not None:
        outer = tuple(keep if x == gone else x for x in outer)
    new_rot, outer, ids = _compact(rot, outer)
    mapping = {v: ids[keep if v == gone else v] for v in range(g.n)}
    return RotationGraph(new_rot, outer), mapping


def cycle_sides(g: RotationGraph, cycle: Sequence[int]) -> tuple[set[int], set[int]]:
    """Face indices on the two sides of a cycle.

    The first set holds the faces of the forward darts of ``cycle`` and every
    face reachable from them without crossing a cycle edge; the second set
    holds the faces of the backward darts.
    """
    _check_cycle(g, cycle)
    on_cycle = {frozenset(e) for e in cycle_darts(cycle)}
    faces = g.faces

    def flood(start: int) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            fi = stack.pop()
            for a, b in faces[fi].darts:
                if frozenset((a, b)) in on_cycle:
                    continue
                fj = g.face_index((b, a))
                if fj not in seen:
                    seen.add(fj)
                    stack.append(fj)
        return seen

    fwd = cycle_darts(cycle)
    side_a = flood(g.face_index(fwd[0]))
    side_b = flood(g.face_index((fwd[0][1], fwd[0][0])))
    if side_a & side_b:
        raise EmbeddingError(f"cycle {tuple(cycle)} does not separate the embedding")
    return side_a, side_b


def split_at_cycle(g: RotationGraph, cycle: Sequence[int]):
    """Cut along a non-facial cycle.

    Returns ``((outside, out_map), (inside, in_map))`` where both maps send
    old ids to new ids.  ``outside`` keeps the outer face and gains ``cycle``
    as a face; ``inside`` has ``cycle`` as its outer face.
    """
    if is_facial(g, cycle):
        raise FacialCycle(f"cycle {tuple(cycle)} bounds a face")
    side_a, side_b = cycle_sides(g, cycle)
    outer_fi = g.face_index(g.outer)
    out_side, in_side = (side_a, side_b) if outer_fi in side_a else (side_b, side_a)
    cyc_edges = {frozenset(e) for e in cycle_darts(cycle)}

    def part(side):
        edges = set(cyc_edges)
        for fi in side:
            for a, b in g.faces[fi].darts:
                edges.add(frozenset((a, b)))
        verts = {v for e in edges for v in e}
        return verts, edges

    results = []
    k0, k1 = cycle[0], cycle[1]
    inner_outer = (k0, k1) if out_side is side_a else (k1, k0)
    for side, outer in ((out_side, g.outer), (in_side, inner_outer)):
        verts, edges = part(side)
        sub, ids = restrict(g, verts, edge_ok=lambda a, b, E=edges: frozenset((a, b)) in E,
                            outer=outer)
        results.append((sub, ids))
    return tuple(results)


def suppress_vertex(g: RotationGraph, v: int) -> tuple[RotationGraph, dict[int, int]]:
    """Replace the path u-v-w through degree-2 vertex ``v`` by the edge uw."""
    if g.degree(v) != 2:
        raise EmbeddingError(f"vertex {v} has degree {g.degree(v)}, not 2")
    u, w = g.rot[v]
    if g.has_edge(u, w):
        raise AlreadyAdjacent(f"{u} and {w} are already adjacent")
    rot = {x: list(g.rot[x]) for x in range(g.n) if x != v}
    rot[u] = [w if x == v else x for x in rot[u]]
    rot[w] = [u if x == v else x for x in rot[w]]
    outer = g.outer
    if outer is not None and v in outer:
        # the outer walk passes prev -> v -> other
        prev = outer[0] if outer[1] == v else next(x for x in (u, w) if g.succ((x, v)) == outer)
        outer = (prev, w if prev == u else u)
    new_rot, outer, ids = _compact(rot, outer)
    return RotationGraph(new_rot, outer), ids


def glue_at_vertex(host: RotationGraph, hv: int, face: FaceWalk,
                   guest: RotationGraph, gv: int) -> tuple[RotationGraph, dict[int, int]]:
    """Place ``guest`` inside ``face`` of ``host`` sharing the single vertex ``hv = gv``.

    The guest's outer face merges with ``face``.  Returns the glued graph and
    the guest-id -> new-id map; host ids are unchanged.
    """
    _on_face(face, hv)
    shift = {x: host.n + x - (1 if x > gv else 0) for x in range(guest.n) if x != gv}
    shift[gv] = hv
    p, q = guest.outer_face.corner(gv)
    r = guest.rot[gv]
    i = guest._pos[gv][q]
    block = [shift[x] for x in r[i:] + r[:i]]
    rot = [list(x) for x in host.rot]
    a, _ = face.corner(hv)
    j = host._pos[hv][a] + 1
    rot[hv][j:j] = block
    for x in range(guest.n):
        if x != gv:
            rot.append([shift[y] for y in guest.rot[x]])
    return RotationGraph(rot, host.outer), shift
