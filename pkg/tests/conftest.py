import math

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings

from tfcolor.planar import build, from_coordinates, reroot
from tfcolor.generators import cube, cycle, dodecahedron

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def c6_with_chord_vertex():
    """C6 on 0..5 (outer) plus vertex 6 inside, adjacent to 0 and 3."""
    rot = [[1, 6, 5], [2, 0], [3, 1], [4, 6, 2], [5, 3], [0, 4], [3, 0]]
    return build(rot, (0, 1))


def terminal_fixture():
    """C6 on 0..5 (outer) with vertex 6 adjacent to 1, 3 and 5."""
    coords = [(math.cos(math.pi * i / 3), math.sin(math.pi * i / 3)) for i in range(6)]
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(6, 1), (6, 3), (6, 5)]
    g = from_coordinates(7, edges, coords + [(0.0, 0.0)])
    return reroot(g, (0, 1) if g.face_index((0, 1)) == g.face_index(g.outer) else (1, 0))


def k5_rotation():
    return build([[u for u in range(5) if u != v] for v in range(5)], (0, 1))


def groetzsch_rotation():
    G = nx.mycielski_graph(4)
    rot = [sorted(G[v]) for v in range(G.number_of_nodes())]
    return build(rot, (0, rot[0][0]))


def as_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def face_outer(g, length):
    """The same graph rerooted at its first face of the given length."""
    f = next(f for f in g.faces if f.length == length)
    return reroot(g, f.darts[0])


@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def q3():
    return cube()


@pytest.fixture
def dodeca():
    return dodecahedron()


def oracle_lift(red, phi):
    """Colour the children of ``red`` with the brute-force oracle and lift.

    Returns the parent colouring; raises AssertionError if the oracle cannot
    extend a child boundary or the lifted colouring is wrong.
    """
    from tfcolor.oracle import brute_force_3color, first_violation
    from tfcolor.validity import is_valid_boundary

    cols = []
    for i, child in enumerate(red.children):
        b = red.child_boundary(i, phi, cols[0] if cols else None)
        assert is_valid_boundary(b), (red.kind, b)
        c = brute_force_3color(child, b.as_dict())
        assert c is not None, (red.kind, b)
        cols.append(c)
    col = red.lift(phi, cols)
    assert first_violation(red.parent, col, phi) is None
    return col, cols


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
