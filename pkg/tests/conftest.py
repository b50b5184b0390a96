"""Shared fixtures: small named graphs and the exhaustive catalog.

Expected values asserted in the tests were frozen from the brute-force
socle oracle and the exhaustive reference matcher, or derived by hand
where small enough to check directly.
"""

import pytest

from edgepow.catalog import connected_graphs
from edgepow.graph import Graph


def build(n, edges):
    return Graph.from_edges(n, edges)


TRIANGLE_EDGES = [(1, 2), (1, 3), (2, 3)]

# triangle with a pendant vertex
PAW_EDGES = [(1, 2), (1, 3), (2, 3), (3, 4)]

# two triangles sharing vertex 3
BOWTIE_EDGES = [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]

# triangle {1,2,3} and pentagon {2,4,6,5,3} sharing the edge {2,3}
TRI_PENTAGON_EDGES = [(1, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 6), (5, 6)]

# bowtie on {1..5} with one pendant on each of 1, 2, 4, 5
BOWTIE_PENDANTS_EDGES = [
    (1, 2), (1, 3), (1, 6), (2, 3), (2, 7),
    (3, 4), (3, 5), (4, 5), (4, 8), (5, 9),
]

TWO_TRIANGLES_EDGES = [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]

# two triangles joined by the edge {3,4}
TWO_TRI_EDGE_EDGES = [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)]

# two triangles joined by the path 3-4-5
TWO_TRI_PATH_EDGES = [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7)]

# two_tri_edge extended by the open path 2-7-6
TWO_TRI_EDGE_EAR_EDGES = TWO_TRI_EDGE_EDGES + [(2, 7), (6, 7)]

# two_tri_path extended by the open path 2-8-9-7
TWO_TRI_PATH_EAR_EDGES = TWO_TRI_PATH_EDGES + [(2, 8), (8, 9), (9, 7)]


def cycle_edges(n):
    return [(i, i + 1) for i in range(1, n)] + [(1, n)]


@pytest.fixture
def triangle():
    return build(3, TRIANGLE_EDGES)


@pytest.fixture
def paw():
    return build(4, PAW_EDGES)


@pytest.fixture
def bowtie():
    return build(5, BOWTIE_EDGES)


@pytest.fixture
def tri_pentagon():
    return build(6, TRI_PENTAGON_EDGES)


@pytest.fixture
def bowtie_pendants():
    return build(9, BOWTIE_PENDANTS_EDGES)


@pytest.fixture
def two_triangles():
    return build(6, TWO_TRIANGLES_EDGES)


@pytest.fixture
def two_tri_edge():
    return build(6, TWO_TRI_EDGE_EDGES)


@pytest.fixture
def two_tri_path():
    return build(7, TWO_TRI_PATH_EDGES)


@pytest.fixture
def two_tri_edge_ear():
    return build(7, TWO_TRI_EDGE_EAR_EDGES)


@pytest.fixture
def two_tri_path_ear():
    return build(9, TWO_TRI_PATH_EAR_EDGES)


@pytest.fixture
def c4():
    return build(4, cycle_edges(4))


@pytest.fixture
def c5():
    return build(5, cycle_edges(5))


@pytest.fixture
def c6():
    return build(6, cycle_edges(6))


@pytest.fixture
def c7():
    return build(7, cycle_edges(7))


@pytest.fixture(scope="session")
def catalog6():
    """Connected graphs up to isomorphism, keyed by vertex count."""
    return {n: connected_graphs(n) for n in range(2, 7)}
