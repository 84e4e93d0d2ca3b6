"""Boundary-colouring validity, valid pairs and their well-order."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotProper
from .planar import RotationGraph, find_triangle, is_connected, is_induced

COLORS = (1, 2, 3)
# opposite positions on a 6-cycle, in boundary order
OPPOSITE_PAIRS = ((0, 3), (1, 4), (2, 5))


@dataclass(frozen=True)
class BoundaryColoring:
    """Colours of the outer cycle, listed in cycle order."""

    cycle: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.cycle) != len(self.colors):
            raise ValueError("cycle and colors differ in length")

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.cycle, self.colors))

    def is_proper(self) -> bool:
        k = len(self.colors)
        return all(c in COLORS for c in self.colors) and all(
            self.colors[i] != self.colors[(i + 1) % k] for i in range(k))


def is_valid_boundary(b: BoundaryColoring) -> bool:
    if not b.is_proper():
        raise NotProper(f"boundary colouring {b.colors} is not proper")
    k = len(b.cycle)
    if k <= 5:
        return True
    if k == 6:
        return any(b.colors[i] != b.colors[j] for i, j in OPPOSITE_PAIRS)
    return False


@dataclass(frozen=True)
class ValidPair:
    graph: RotationGraph
    boundary: BoundaryColoring

    @property
    def size(self) -> tuple[int, int]:
        return self.graph.n, self.graph.m


def boundary_from_colors(g: RotationGraph, colors: Sequence[int] | dict[int, int]) -> BoundaryColoring:
    """Read the outer-cycle colours from a full colouring or a partial map."""
    cyc = g.outer_cycle
    return BoundaryColoring(cyc, tuple(colors[v] for v in cyc))


def outer_shape_problem(g: RotationGraph) -> str | None:
    """Reason the outer face is not an induced cycle of length 4..6, or None."""
    if not is_connected(g):
        return "Disconnected"
    cyc = g.outer_cycle
    if len(set(cyc)) != len(cyc):
        return "OuterNotCycle"
    if not 3 <= len(cyc) <= 6:
        return "OuterTooLong"
    if not is_induced(g, cyc):
        return "NotInduced"
    return None


def valid_pair_problem(g: RotationGraph, b: BoundaryColoring) -> str | None:
    tri = find_triangle(g)
    if tri is not None:
        return f"TriangleFound {tri}"
    shape = outer_shape_problem(g)
    if shape:
        return shape
    cyc = g.outer_cycle
    if len(b.cycle) != len(cyc) or set(b.cycle) != set(cyc):
        return "BoundaryNotOuterCycle"
    if b.cycle != cyc:
        b = BoundaryColoring(cyc, tuple(b.as_dict()[v] for v in cyc))
    if not b.is_proper():
        return "NotProper"
    if not is_valid_boundary(b):
        return "boundary coloring not valid"
    return None


def is_valid_pair(g: RotationGraph, b: BoundaryColoring) -> tuple[bool, str | None]:
    """(ok, reason): reason names the first failed condition."""
    why = valid_pair_problem(g, b)
    return why is None, why


def make_pair(g: RotationGraph, colors: Sequence[int] | dict[int, int]) -> ValidPair:
    """Build a ValidPair, raising ``ValueError`` with the reason if it is not one."""
    b = boundary_from_colors(g, colors)
    why = valid_pair_problem(g, b)
    if why:
        raise ValueError(why)
    return ValidPair(g, b)


def pair_less(p1: tuple[int, int], p2: tuple[int, int]) -> bool:
    """(V, E) order: fewer vertices first, then more edges."""
    (v1, e1), (v2, e2) = p1, p2
    return v1 < v2 or (v1 == v2 and e1 > e2)
