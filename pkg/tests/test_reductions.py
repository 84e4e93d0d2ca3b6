import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import c6_with_chord_vertex, face_outer, oracle_lift, terminal_fixture
from tfcolor.errors import ProofOrderViolation
from tfcolor.generators import cube, cycle, dodecahedron, hang, prism, random_chorded, rings
from tfcolor.oracle import brute_force_3color
from tfcolor.planar import add_edge_in_face, glue_at_vertex, is_facial, is_induced, find_short_cycles
from tfcolor.reductions import (
    Kind,
    apply,
    apply_R1,
    apply_R3,
    apply_R4,
    apply_R5,
    apply_R6,
    detect,
    detect_R1,
    detect_R2,
    detect_R3,
    detect_R4,
    detect_R5,
    detect_R6,
    r6_completion,
    reduce_once,
)
from tfcolor.validity import is_valid_boundary, pair_less, BoundaryColoring


def inner_face(g):
    return next(f for f in g.faces if g.outer not in f.darts)


def phi_of(g, colors):
    return dict(zip(g.outer_cycle, colors))


def pendant_c5():
    g = cycle(5)
    h, _ = glue_at_vertex(g, 0, inner_face(g), cycle(4), 0)
    return h


# -- R1 -----------------------------------------------------------------------


def test_r1_examples():
    g = c6_with_chord_vertex()
    assert detect_R1(g) == (6,)
    assert detect_R1(face_outer(cube(), 4)) is None
    red = apply_R1(g, 6)
    (child,) = red.children
    assert (child.n, child.m) == (6, 6)
    phi = {0: 1, 1: 2, 2: 1, 3: 2, 4: 1, 5: 3}
    col = red.lift(phi, [[phi[v] for v in range(6)]])
    assert col[6] == 3  # neighbours 0 and 3 carry 1 and 2


def test_r1_smallest_free_colour():
    g = c6_with_chord_vertex()
    red = apply_R1(g, 6)
    phi = {0: 2, 1: 1, 2: 3, 3: 2, 4: 1, 5: 3}
    col = red.lift(phi, [[phi[v] for v in range(6)]])
    assert col[6] == 1


def test_r1_pendant_degree_one():
    g = cycle(5)
    # one interior vertex hanging off vertex 0
    rot = [list(r) for r in g.rot] + [[0]]
    rot[0].insert(1, 5)
    from tfcolor.planar import build
    h = build(rot, g.outer)
    assert detect_R1(h) == (5,)


# -- R2 -----------------------------------------------------------------------


def test_r2_none_on_cube_and_prism():
    assert detect_R2(face_outer(cube(), 4)) is None
    assert detect_R2(prism(5)) is None


def test_r2_separating_pentagon():
    g = rings(5, 3)
    K = detect_R2(g)
    assert K is not None and len(K) == 5 and not is_facial(g, K)
    assert set(K) == set(range(5, 10))
    # prism with a path inside the inner pentagon: the inner pentagon stops bounding a face
    p = prism(5)
    f = next(f for f in p.faces if f.length == 5 and p.outer not in f.darts)
    a, b = f.vertices[0], f.vertices[2]
    q = add_edge_in_face(p, a, b, f)
    from tfcolor.planar import subdivide_edge
    q = subdivide_edge(q, a, b, 2)
    assert tuple(sorted(detect_R2(q))) == tuple(sorted(f.vertices))


def test_r2_lift_all_boundaries():
    g = rings(5, 3)
    hit = detect(g)
    assert hit[0] == Kind.R2
    red = apply(g, *hit)
    assert len(red.children) == 2
    for c in red.children:
        assert pair_less((c.n, c.m), (g.n, g.m))
    for cols in itertools.product((1, 2, 3), repeat=5):
        if all(cols[i] != cols[(i + 1) % 5] for i in range(5)):
            oracle_lift(red, phi_of(g, cols))


# -- R3 -----------------------------------------------------------------------


def test_r3_c6_with_hanging_square():
    g = cycle(6)
    h, _ = glue_at_vertex(g, 0, inner_face(g), cycle(4), 0)
    hit = detect_R3(h)
    assert hit is not None and hit[0] == 0
    red = apply_R3(h, *hit)
    (child,) = red.children
    assert (child.n, child.m) == (h.n, h.m + 1)
    assert pair_less((child.n, child.m), (h.n, h.m))
    phi = phi_of(h, (1, 2, 1, 2, 1, 3))
    col, (cc,) = oracle_lift(red, phi)
    assert col == cc  # identity lift


def test_r3_none_when_two_connected():
    assert detect_R3(prism(5)) is None


def test_r3_fires_in_priority_order():
    g = hang(5, 6)
    hit = detect(g)
    assert hit[0] == Kind.R3


# -- R4 -----------------------------------------------------------------------


def test_r4_hexagonal_prism():
    g = prism(6)
    K = detect_R4(g)
    assert K is not None and set(K) == set(range(6, 12))
    red = apply_R4(g, *K)
    assert len(red.children) == 1  # the inner hexagon bounds a face: chord added in place
    (child,) = red.children
    assert (child.n, child.m) == (g.n, g.m + 1)
    phi = phi_of(g, (1, 2, 1, 2, 1, 3))
    oracle_lift(red, phi)


def test_r4_two_children_when_separating():
    g = rings(6, 3)
    K = detect_R4(g)
    assert K is not None and not is_facial(g, K)
    red = apply_R4(g, *K)
    assert len(red.children) == 2
    out, ins = red.children
    assert ins.n == 12 and out.m == 6 * 2 + 6 + 1
    oracle_lift(red, phi_of(g, (1, 2, 1, 2, 1, 3)))


def test_r4_cube_six_cycles():
    q = face_outer(cube(), 4)
    sixes = [K for K in find_short_cycles(q, 6) if len(K) == 6]
    assert len(sixes) == 16
    assert sum(is_induced(q, K) for K in sixes) == 4
    assert detect_R4(q) is not None


def test_r4_not_on_prism5():
    g = prism(5)
    sixes = [K for K in find_short_cycles(g, 6) if len(K) == 6]
    expected = [K for K in sixes if is_induced(g, K)]
    assert (detect_R4(g) is not None) == bool(expected)


# -- R5 -----------------------------------------------------------------------


def test_r5_on_cube():
    q = face_outer(cube(), 4)
    hit = detect_R5(q)
    assert hit is not None
    red = apply_R5(q, *hit)
    assert red.kind == Kind.R5
    (child,) = red.children
    assert (child.n, child.m) == (7, 10)
    for cols in [(1, 2, 1, 2), (1, 2, 3, 2), (1, 2, 1, 3)]:
        oracle_lift(red, phi_of(q, cols))


def test_r5_terminal_fixture():
    g = terminal_fixture()
    red = reduce_once(g)
    assert red.kind == Kind.R5T and red.children == ()
    # v1 = 0, w2..w6 = 1..5, interior vertex 6 adjacent to 1, 3, 5
    phi = {0: 1, 1: 2, 2: 1, 3: 2, 4: 1, 5: 2}
    col = red.lift(phi, [])
    assert col[6] == 1


def test_r5_terminal_every_valid_boundary():
    g = terminal_fixture()
    red = reduce_once(g)
    C = g.outer_cycle
    for cols in itertools.product((1, 2, 3), repeat=6):
        b = BoundaryColoring(C, cols)
        if not b.is_proper() or not is_valid_boundary(b):
            continue
        red.lift(b.as_dict(), [])  # checks properness internally


# -- R6 -----------------------------------------------------------------------


def test_r6_completion_examples():
    assert r6_completion(1, 1, 1, 2, 3) == (2, 3, 2, 1)
    got = r6_completion(1, 3, 3, 2, 1)
    assert got in [(2, 1, 2, 3), (3, 1, 2, 3), (3, 2, 1, 3)]
    assert got == (2, 1, 2, 3)


@given(st.sampled_from([1, 2, 3]), st.sampled_from([1, 2, 3]), st.sampled_from([1, 2, 3]),
       st.sampled_from([1, 2, 3]))
def test_r6_completion_always_exists(x1, x23, x4, v5):
    got = r6_completion(x1, x23, x23, x4, v5)
    if x1 == x4:
        return
    assert got is not None
    c1, c2, c3, c4 = got
    assert c1 not in (x1, v5, c2) and c4 not in (x4, v5, c3)
    assert c2 not in (x23, c3) and c3 != x23


def test_r6_on_dodecahedron():
    d = dodecahedron()
    assert detect(d)[0] == Kind.R6
    cfg = detect_R6(d)
    assert cfg is not None
    red = apply_R6(d, *cfg)
    (child,) = red.children
    # 4 vertices deleted and x2, x3 merged; 9 edges go, x1x4 comes in, and
    # the common neighbour of x2 and x3 loses one of its two parallel edges
    x2, x3 = cfg[6], cfg[7]
    assert len(set(d.rot[x2]) & set(d.rot[x3])) == 1
    assert (child.n, child.m) == (15, 21)
    for cols in [(1, 2, 1, 2, 3), (1, 2, 3, 1, 2), (2, 3, 1, 3, 1)]:
        oracle_lift(red, phi_of(d, cols))


def test_r6_lift_ignores_deleted_colours():
    d = dodecahedron()
    red = apply_R6(d, *detect_R6(d))
    phi = phi_of(d, (1, 2, 1, 2, 3))
    (child,) = red.children
    cc = brute_force_3color(child, red.child_boundary(0, phi).as_dict())
    a = red.lift(phi, [cc])
    b = red.lift(phi, [list(cc)])
    assert a == b


# -- priority / safety ----------------------------------------------------------


@pytest.mark.parametrize("seed", range(25))
def test_children_valid_and_smaller(seed):
    g = random_chorded(12, seed)
    for f in g.faces:
        if f.length > 6 or len(set(f.vertices)) != f.length or not is_induced(g, f.vertices):
            continue
        from tfcolor.planar import reroot
        h = reroot(g, f.darts[0])
        stack = [h]
        while stack:
            x = stack.pop()
            if x.n == len(x.outer_cycle) and x.m == x.n:
                continue
            red = reduce_once(x)
            assert red is not None
            for c in red.children:
                assert pair_less((c.n, c.m), (x.n, x.m))
                stack.append(c)
