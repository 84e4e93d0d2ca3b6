import itertools

import pytest
from hypothesis import given, strategies as st

from tfcolor.errors import SpecOutOfRange
from tfcolor.generators import (
    FAMILIES,
    GenSpec,
    corpus_specs,
    cube,
    cycle,
    generate,
    grid,
    named_specs,
    random_insertion,
)
from tfcolor.oracle import brute_force_3color, count_extensions, extend_batch, first_violation
from tfcolor.planar import build, contains_triangle, is_connected
from tfcolor.solver import three_color
from tfcolor.validity import BoundaryColoring


def k4():
    return build([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]], (0, 1))


def exhaustive(g, partial=None):
    """All proper colourings by plain enumeration of 3^n tuples."""
    out = []
    for cols in itertools.product((1, 2, 3), repeat=g.n):
        if partial and any(cols[v] != c for v, c in partial.items()):
            continue
        if all(cols[u] != cols[v] for u, v in g.edges()):
            out.append(list(cols))
    return out


def test_oracle_examples():
    assert brute_force_3color(cycle(5)) == [1, 2, 1, 2, 3]
    pre = dict(enumerate((1, 2, 3, 1, 2, 3)))
    assert brute_force_3color(cycle(6), pre) == [1, 2, 3, 1, 2, 3]
    assert brute_force_3color(k4()) is None


def test_count_examples():
    c5 = cycle(5)
    assert count_extensions(c5, BoundaryColoring(c5.outer_cycle, (1, 2, 1, 2, 3))) == 1
    assert count_extensions(c5) == 30  # (k-1)^n + (-1)^n (k-1) at k = 3, n = 5


@pytest.mark.parametrize("spec", [s for s in corpus_specs(range(5, 9), 6) if generate(s).n <= 8],
                         ids=lambda s: s.manifest_line())
def test_oracle_agrees_with_enumeration(spec):
    g = generate(spec)
    every = exhaustive(g)
    assert count_extensions(g) == len(every)
    got = brute_force_3color(g)
    assert (got is None) == (not every)
    if every:
        assert got == every[0]  # smallest vertex, smallest colour first is lexicographic
    pre = {0: 2}
    assert count_extensions(g, pre) == len(exhaustive(g, pre))


def test_extend_batch_matches_single_calls():
    g = random_insertion(12, 3)
    cyc = g.outer_cycle
    rows = [cols for cols in itertools.product((1, 2, 3), repeat=len(cyc))][:40]
    out, ok = extend_batch(g, cyc, rows)
    for r, cols in enumerate(rows):
        single = brute_force_3color(g, dict(zip(cyc, cols)))
        assert ok[r] == (single is not None)
        if single is not None:
            assert out[r].tolist() == single


def test_generate_named():
    q = generate(GenSpec("cube"))
    assert (q.n, q.m, len(q.faces)) == (8, 12, 6) and not contains_triangle(q)
    g = generate(GenSpec("random_insertion", (12,), 1))
    assert g.n == 12 and not contains_triangle(g)
    gr = grid(3, 3)
    col, _ = three_color(gr)
    assert first_violation(gr, col) is None
    assert len(named_specs()) == 9 + 5 + 9 + 2 + 2


def test_generate_errors():
    with pytest.raises(SpecOutOfRange):
        generate(GenSpec("cycle", (3,)))
    with pytest.raises(SpecOutOfRange):
        generate(GenSpec("nope"))
    with pytest.raises(SpecOutOfRange):
        generate(GenSpec("grid", (3,)))


def test_manifest_round_trip():
    for spec in corpus_specs(range(8, 10), 3):
        assert GenSpec.from_manifest_line(spec.manifest_line()) == spec
    assert GenSpec("grid", (2, 3)).manifest_line() == "gen grid 2,3 0"


families = st.sampled_from(["random_insertion", "random_chorded", "random_core"])


@given(families, st.integers(5, 24), st.integers(0, 2 ** 63 - 1))
def test_generated_graphs_are_triangle_free_plane(family, n, seed):
    g = generate(GenSpec(family, (n,), seed))
    assert not contains_triangle(g) and is_connected(g)
    assert g.n - g.m + len(g.faces) == 2
    assert g == generate(GenSpec(family, (n,), seed))
    col = brute_force_3color(g)
    assert col is not None and first_violation(g, col) is None


def test_all_families_build():
    params = {"cycle": (6,), "prism": (5,), "grid": (2, 3), "hexpatch": (2,), "cube": (),
              "dodecahedron": (), "random_insertion": (9,), "random_chorded": (9,),
              "random_core": (12,), "rings": (4, 3), "hang": (5, 4)}
    assert set(params) == set(FAMILIES)
    for fam, p in params.items():
        g = generate(GenSpec(fam, p, 2))
        assert not contains_triangle(g)
