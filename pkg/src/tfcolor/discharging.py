"""Charge bookkeeping for the completeness argument of the reduction set.

All charges are stored as integers counting thirds, so ``-24`` means -8.
Vertices start at ``deg - 4`` and faces at ``len - 4``; then

* every non-outer face sends 1/3 to each incident vertex of degree 2, and to
  each incident vertex of degree 3 that is not on the outer cycle C;
* every vertex z of C sends 1/3 to each 5-face *tied* to it: a 5-face Q with
  z not on Q and a degree-3 neighbour of z on Q that is not on C.

For a valid pair on which no reduction applies, every interior vertex and
every non-outer face ends non-negative and the outer cycle cannot absorb -8,
a contradiction.  ``audit`` prints the per-element values and the bounds so
the failure of that argument can be read off directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .planar import RotationGraph


@dataclass
class ChargeLedger:
    vertex: list[int]
    face: list[int]

    @property
    def total(self) -> int:
        return sum(self.vertex) + sum(self.face)


def initial_charges(g: RotationGraph) -> ChargeLedger:
    return ChargeLedger([3 * (g.degree(v) - 4) for v in range(g.n)],
                        [3 * (f.length - 4) for f in g.faces])


def _outer(g: RotationGraph) -> tuple[int, set[int]]:
    if g.outer is None:
        return -1, set()
    return g.face_index(g.outer), set(g.outer_cycle)


def tied_faces(g: RotationGraph, z: int, outer_cycle: set[int] | None = None) -> set[int]:
    """Indices of the 5-faces tied to outer vertex ``z``."""
    ofi, C = _outer(g)
    if outer_cycle is not None:
        C = outer_cycle
    tied = set()
    for fi, f in enumerate(g.faces):
        vs = set(f.vertices)
        if fi == ofi or f.length != 5 or z in vs:
            continue
        if any(u in vs and u not in C and g.degree(u) == 3 for u in g.rot[z]):
            tied.add(fi)
    return tied


def receivers(g: RotationGraph, fi: int, C: set[int]) -> list[int]:
    """Vertices a non-outer face sends charge to."""
    return [v for v in sorted(set(g.faces[fi].vertices))
            if g.degree(v) == 2 or (g.degree(v) == 3 and v not in C)]


def redistribute(g: RotationGraph) -> ChargeLedger:
    led = initial_charges(g)
    ofi, C = _outer(g)
    for fi in range(len(g.faces)):
        if fi == ofi:
            continue
        for v in receivers(g, fi, C):
            led.face[fi] -= 1
            led.vertex[v] += 1
    for z in sorted(C):
        for fi in tied_faces(g, z, C):
            led.vertex[z] -= 1
            led.face[fi] += 1
    return led


def _t(x: int) -> str:
    return f"{x}/3"


@dataclass
class AuditReport:
    initial: ChargeLedger
    final: ChargeLedger
    lines: list[str] = field(default_factory=list)
    negative_vertices: list[int] = field(default_factory=list)
    negative_faces: list[int] = field(default_factory=list)
    suspects: dict[int, str] = field(default_factory=dict)

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def audit(g: RotationGraph) -> AuditReport:
    """Evaluate every charge and the lower bounds used against them."""
    init = initial_charges(g)
    fin = redistribute(g)
    ofi, C = _outer(g)
    rep = AuditReport(init, fin)
    out = rep.lines
    for v in range(g.n):
        out.append(f"V {v} init {_t(init.vertex[v])} final {_t(fin.vertex[v])}")
    for fi, f in enumerate(g.faces):
        out.append(f"F {fi} len {f.length} init {_t(init.face[fi])} final {_t(fin.face[fi])}")

    for v in range(g.n):
        if v in C or fin.vertex[v] >= 0:
            continue
        rep.negative_vertices.append(v)
        out.append(f"NEG V {v} deg {g.degree(v)} final {_t(fin.vertex[v])} suspect R1")
    for fi, f in enumerate(g.faces):
        if fi == ofi:
            continue
        bound = 2 * f.length - 12
        k = len(receivers(g, fi, C))
        if f.length == 5:
            ties = fin.face[fi] - init.face[fi] + k
            out.append(f"B F {fi} len 5 senders {k} tied {ties} final {_t(fin.face[fi])} "
                       f"bound {_t(3 - k + ties)}")
        else:
            out.append(f"B F {fi} len {f.length} final {_t(fin.face[fi])} bound {_t(bound)}")
        if fin.face[fi] < 0:
            rep.negative_faces.append(fi)
            if any(g.degree(v) <= 2 and v not in C for v in f.vertices):
                why = "R1"
            elif f.length == 4:
                why = "R5"
            elif f.length == 5 and k >= 4:
                why = "R6"
            else:
                why = "R2/R3/R4"
            rep.suspects[fi] = why
            out.append(f"NEG F {fi} len {f.length} final {_t(fin.face[fi])} suspect {why}")
    for z in sorted(C):
        d = g.degree(z)
        bound = -5 if d == 2 else 2 * d - 10
        out.append(f"B C {z} deg {d} final {_t(fin.vertex[z])} bound {_t(bound)}")
    if ofi >= 0:
        k = len(C)
        on_c = fin.face[ofi] + sum(fin.vertex[z] for z in C)
        out.append(f"B OUTER len {k} final {_t(fin.face[ofi])} cycle-sum {_t(on_c)} "
                   f"bound {_t(-10 - 2 * k)}")
    out.append(f"TOTAL {_t(fin.total)}")
    return rep
