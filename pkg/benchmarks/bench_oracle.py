#!/usr/bin/env python
"""Oracle kernel timing: interpreted numpy loops vs the numba-compiled versions.

Workload: count every extension of every valid outer-cycle colouring on a
few corpus graphs (the same kernel criterion 2 uses to cross-check the
solver), then solve one batch of first-found extensions.

    python benchmarks/bench_oracle.py [--repeat 3]
"""
import argparse
import itertools
import time

import numpy as np

from tfcolor import kernels
from tfcolor.generators import GenSpec, generate
from tfcolor.oracle import csr
from tfcolor.planar import reroot

GRAPHS = [GenSpec("dodecahedron"), GenSpec("hexpatch", (2,)), GenSpec("random_chorded", (16,), 7),
          GenSpec("random_insertion", (16,), 3)]


def workload(spec):
    g = generate(spec)
    f = min(g.faces, key=lambda f: f.length)
    g = reroot(g, f.darts[0])
    cyc = g.outer_cycle
    k = len(cyc)
    rows = [c for c in itertools.product((1, 2, 3), repeat=k)
            if all(c[i] != c[(i + 1) % k] for i in range(k))]
    indptr, indices = csr(g)
    pre = np.zeros((len(rows), g.n), dtype=np.int8)
    pre[:, list(cyc)] = rows
    order = np.array([v for v in range(g.n) if v not in set(cyc)], dtype=np.int64)
    return indptr, indices, pre, order


def run_count(count_fn, w):
    indptr, indices, pre, order = w
    return sum(int(count_fn(indptr, indices, row.copy(), order)) for row in pre)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"numba enabled: {kernels.JIT_ENABLED}")
    work = [(s.manifest_line(), workload(s)) for s in GRAPHS]
    # warm up the compiled kernels so compilation is not timed
    _, w0 = work[0]
    run_count(kernels.count, w0)
    kernels.extend_many(w0[0], w0[1], w0[2][:1], w0[3])
    print(f"{'graph':36s} {'task':12s} {'python':>10s} {'jit':>10s} {'speedup':>8s}")
    for name, w in work:
        tp, a = best_of(lambda: run_count(kernels.py_count, w), args.repeat)
        tj, b = best_of(lambda: run_count(kernels.count, w), args.repeat)
        assert a == b, (name, a, b)
        print(f"{name:36s} {'count':12s} {tp:10.4f} {tj:10.4f} {tp / tj:8.1f}x")
        indptr, indices, pre, order = w
        tp, (o1, k1) = best_of(lambda: kernels.py_extend_many(indptr, indices, pre, order), args.repeat)
        tj, (o2, k2) = best_of(lambda: kernels.extend_many(indptr, indices, pre, order), args.repeat)
        assert (o1 == o2).all() and (k1 == k2).all(), name
        print(f"{name:36s} {'extend_many':12s} {tp:10.4f} {tj:10.4f} {tp / tj:8.1f}x")


if __name__ == "__main__":
    main()
