"""Brute-force ground truth for precolouring extension."""

from __future__ import annotations

from typing import Mapping, Sequence

import numpy as np

from . import kernels
from .planar import RotationGraph
from .validity import BoundaryColoring


def csr(g: RotationGraph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(r) for r in g.rot])
    indices = np.fromiter((u for r in g.rot for u in r), dtype=np.int64, count=int(indptr[-1]))
    return indptr, indices


def first_violation(g: RotationGraph, colors: Sequence[int],
                    precoloring: Mapping[int, int] | None = None):
    """First bad edge ``(u, v)``, bad vertex ``(v,)``, or None for a proper extension."""
    if len(colors) != g.n:
        return ("size",)
    for v in range(g.n):
        if colors[v] not in (1, 2, 3):
            return (v,)
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return (u, v)
    if precoloring:
        for v, c in precoloring.items():
            if colors[v] != c:
                return (v,)
    return None


def is_proper(g: RotationGraph, colors: Sequence[int],
              precoloring: Mapping[int, int] | None = None) -> bool:
    return first_violation(g, colors, precoloring) is None


def _seed(g: RotationGraph, partial: Mapping[int, int] | None):
    colors = np.zeros(g.n, dtype=np.int8)
    if partial:
        for v, c in partial.items():
            colors[v] = c
        for u, v in g.edges():
            if colors[u] and colors[u] == colors[v]:
                return None, None
    order = np.array([v for v in range(g.n) if colors[v] == 0], dtype=np.int64)
    return colors, order


def brute_force_3color(g: RotationGraph, partial: Mapping[int, int] | None = None
                       ) -> list[int] | None:
    """Proper 3-colouring extending ``partial`` (smallest vertex, smallest colour first)."""
    colors, order = _seed(g, partial)
    if colors is None:
        return None
    indptr, indices = csr(g)
    if not kernels.extend(indptr, indices, colors, order):
        return None
    return colors.astype(int).tolist()


def count_extensions(g: RotationGraph, boundary: BoundaryColoring | Mapping[int, int] | None = None
                     ) -> int:
    if isinstance(boundary, BoundaryColoring):
        boundary = boundary.as_dict()
    colors, order = _seed(g, boundary)
    if colors is None:
        return 0
    indptr, indices = csr(g)
    return int(kernels.count(indptr, indices, colors, order))


def extend_batch(g: RotationGraph, cycle: Sequence[int], rows: Sequence[Sequence[int]]
                 ) -> tuple[np.ndarray, np.ndarray]:
    """Extend many colourings of the same vertex set ``cycle`` in one kernel call.

    Returns ``(colorings, ok)``; rows whose precolouring is improper on its own
    report ``ok = False``.
    """
    rows = np.asarray(rows, dtype=np.int8).reshape(-1, len(cycle))
    pre = np.zeros((rows.shape[0], g.n), dtype=np.int8)
    pre[:, list(cycle)] = rows
    fixed = set(cycle)
    order = np.array([v for v in range(g.n) if v not in fixed], dtype=np.int64)
    bad = np.zeros(rows.shape[0], dtype=bool)
    for u, v in g.edges():
        if u in fixed and v in fixed:
            bad |= pre[:, u] == pre[:, v]
    indptr, indices = csr(g)
    out, ok = kernels.extend_many(indptr, indices, pre, order)
    return out, ok & ~bad
