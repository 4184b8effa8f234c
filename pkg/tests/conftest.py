import pytest

from mbv import build_graph


@pytest.fixture
def p4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def c5():
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.fixture
def star():
    # K_{1,3} with center 0
    return build_graph(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def k4():
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def k24():
    # parts {0, 1} and {2, 3, 4, 5}, all eight cross edges
    return build_graph(6, [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5)])


@pytest.fixture
def two_triangles():
    # triangles {0,1,2} and {3,4,5} joined by the bridge (2, 3)
    return build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])


@pytest.fixture
def spider():
    # center 0 with three legs of length two
    return build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


@pytest.fixture
def petersen():
    edges = [
        (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
        (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
    ]
    return build_graph(10, edges)
