import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mecsize import InfeasibleParameterError, is_chordal, is_connected, random_uccg
from mecsize.generate import random_bounded_uccg, random_tree


def test_requested_edge_count():
    g = random_uccg(20, 0.2, seed=0)
    assert g.n == 20
    assert g.n_undirected() == 38  # round(0.2 * 190)


def test_connected_and_chordal():
    g = random_uccg(15, 0.4, seed=11)
    assert is_connected(g)
    assert is_chordal(g)


def test_two_vertices_full_density():
    g = random_uccg(2, 1.0, seed=5)
    assert g.undirected_edges == {("v1", "v2")}


def test_determinism():
    a = random_uccg(12, 0.3, seed=99)
    b = random_uccg(12, 0.3, seed=99)
    assert a == b
    c = random_uccg(12, 0.3, seed=100)
    assert a != c


def test_single_vertex():
    g = random_uccg(1, 1.0, seed=0)
    assert g.n == 1 and g.n_undirected() == 0


def test_infeasible_edge_count():
    with pytest.raises(InfeasibleParameterError):
        random_uccg(10, 0.05, seed=0)  # round(.05*45)=2 < 9


@settings(max_examples=20, deadline=None)
@given(
    p=st.integers(4, 12),
    r=st.floats(0.3, 1.0),
    seed=st.integers(0, 10**9),
)
def test_always_connected_chordal_exact_edges(p, r, seed):
    target = round(r * p * (p - 1) / 2)
    if target < p - 1:
        return
    g = random_uccg(p, r, seed)
    assert is_connected(g)
    assert is_chordal(g)
    assert g.n_undirected() == target


def test_bounded_degree_variant():
    g = random_bounded_uccg(25, 4, seed=3)
    assert is_connected(g) and is_chordal(g)
    assert max(len(g.undirected_neighbors(v)) for v in g.vertices) <= 4


def test_random_tree_shape():
    g = random_tree(30, seed=1, max_degree=4)
    assert g.n_undirected() == 29
    assert is_connected(g)
    assert max(len(g.undirected_neighbors(v)) for v in g.vertices) <= 4
