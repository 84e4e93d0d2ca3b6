"""Backtracking 3-colouring kernels over CSR adjacency arrays.

Each kernel exists twice: ``py_*`` is the interpreted reference and the
unprefixed name is the one selected by the JIT switch in ``_jit``.  Colours
are 1..3 and 0 marks an uncoloured vertex.  Vertices in ``order`` are filled
in that order, smallest colour first.
"""

import numpy as np

from ._jit import JIT_ENABLED, jit


def py_extend(indptr, indices, colors, order):
    k = order.shape[0]
    i = 0
    while 0 <= i < k:
        v = order[i]
        c = colors[v] + 1
        while c <= 3:
            clash = False
            for p in range(indptr[v], indptr[v + 1]):
                if colors[indices[p]] == c:
                    clash = True
                    break
            if not clash:
                break
            c += 1
        if c <= 3:
            colors[v] = c
            i += 1
        else:
            colors[v] = 0
            i -= 1
    return i == k


def py_count(indptr, indices, colors, order):
    k = order.shape[0]
    count = 0
    i = 0
    while i >= 0:
        if i == k:
            count += 1
            i -= 1
            continue
        v = order[i]
        c = colors[v] + 1
        while c <= 3:
            clash = False
            for p in range(indptr[v], indptr[v + 1]):
                if colors[indices[p]] == c:
                    clash = True
                    break
            if not clash:
                break
            c += 1
        if c <= 3:
            colors[v] = c
            i += 1
        else:
            colors[v] = 0
            i -= 1
    return count


def py_extend_many(indptr, indices, pre, order):
    rows = pre.shape[0]
    out = pre.copy()
    ok = np.zeros(rows, dtype=np.bool_)
    for r in range(rows):
        ok[r] = py_extend(indptr, indices, out[r], order)
    return out, ok


extend = jit(py_extend)
count = jit(py_count)


def _extend_many(indptr, indices, pre, order):
    rows = pre.shape[0]
    out = pre.copy()
    ok = np.zeros(rows, dtype=np.bool_)
    for r in range(rows):
        ok[r] = extend(indptr, indices, out[r], order)
    return out, ok


extend_many = jit(_extend_many)

__all__ = ["JIT_ENABLED", "extend", "count", "extend_many", "py_extend", "py_count",
           "py_extend_many"]
