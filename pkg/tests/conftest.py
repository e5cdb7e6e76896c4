import pytest

from mecsize import MixedGraph


def undirected(names, edges):
    return MixedGraph(names, undirected_edges=edges)


@pytest.fixture
def diamond():
    """Two triangles sharing the edge v2-v3; class size 10."""
    return undirected(
        ["v1", "v2", "v3", "v4"],
        [("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v2", "v4"), ("v3", "v4")],
    )


@pytest.fixture
def single_edge():
    return undirected(["u", "v"], [("u", "v")])


@pytest.fixture
def path3():
    return undirected(["v1", "v2", "v3"], [("v1", "v2"), ("v2", "v3")])


@pytest.fixture
def path4():
    return undirected(
        ["v1", "v2", "v3", "v4"], [("v1", "v2"), ("v2", "v3"), ("v3", "v4")]
    )


def complete_graph(n):
    names = [f"v{i + 1}" for i in range(n)]
    return undirected(
        names, [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    )
