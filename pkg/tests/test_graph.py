import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mecsize import (
    InvalidGraphError,
    MixedGraph,
    bfs_levels,
    chain_components,
    enumerate_mec,
    is_chordal,
    is_dag,
    markov_equivalent,
    meek_close,
    random_uccg,
    v_structures,
)
from mecsize.errors import (
    DirectedCycleError,
    NotDagError,
    UnknownVertexError,
    VertexSetMismatchError,
)

from conftest import complete_graph, undirected


class TestMixedGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(InvalidGraphError):
            MixedGraph(["a"], undirected_edges=[("a", "a")])

    def test_rejects_edge_in_both_sets(self):
        with pytest.raises(InvalidGraphError):
            MixedGraph(["a", "b"], [("a", "b")], [("a", "b")])

    def test_rejects_mutually_directed_pair(self):
        with pytest.raises(InvalidGraphError):
            MixedGraph(["a", "b"], directed_edges=[("a", "b"), ("b", "a")])

    def test_vertex_order_preserved(self):
        g = MixedGraph(["c", "a", "b"], [("a", "b")])
        assert g.vertices == ("c", "a", "b")

    def test_edges_from_unlisted_vertices_register(self):
        g = MixedGraph([], [("x", "y")])
        assert g.vertices == ("x", "y")

    def test_adjacency_and_neighbors(self, diamond):
        assert diamond.adjacent("v1", "v2")
        assert not diamond.adjacent("v1", "v4")
        assert diamond.undirected_neighbors("v2") == {"v1", "v3", "v4"}

    def test_induced_subgraph(self, diamond):
        sub = diamond.induced_subgraph(["v1", "v2", "v3"])
        assert sub.vertices == ("v1", "v2", "v3")
        assert sub.undirected_edges == frozenset(
            {("v1", "v2"), ("v1", "v3"), ("v2", "v3")}
        )

    def test_unknown_vertex(self, diamond):
        with pytest.raises(UnknownVertexError):
            diamond.index_of("nope")


class TestChordality:
    def test_four_cycle_not_chordal(self):
        g = undirected("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
        assert not is_chordal(g)

    def test_diamond_chordal(self, diamond):
        assert is_chordal(diamond)

    def test_complete_chordal(self):
        assert is_chordal(complete_graph(4))

    def test_single_vertex_chordal(self):
        assert is_chordal(MixedGraph(["a"]))

    def test_rejects_directed_edges(self):
        g = MixedGraph(["a", "b"], directed_edges=[("a", "b")])
        with pytest.raises(InvalidGraphError):
            is_chordal(g)


class TestChainComponents:
    def test_oriented_diamond_leaves_one_pair(self):
        g = MixedGraph(
            ["v1", "v2", "v3", "v4"],
            undirected_edges=[("v2", "v3")],
            directed_edges=[("v1", "v2"), ("v1", "v3"), ("v2", "v4"), ("v3", "v4")],
        )
        comps = chain_components(g)
        multi = [c for c in comps if c.n > 1]
        assert len(multi) == 1
        assert set(multi[0].vertices) == {"v2", "v3"}

    def test_fully_directed_gives_singletons(self):
        g = MixedGraph("abc", directed_edges=[("a", "b"), ("b", "c")])
        comps = chain_components(g)
        assert [c.vertices for c in comps] == [("a",), ("b",), ("c",)]

    def test_undirected_path_is_single_component(self, path3):
        comps = chain_components(path3)
        assert len(comps) == 1
        assert comps[0] == path3

    def test_partition(self, diamond):
        g = MixedGraph(
            diamond.vertices,
            undirected_edges=[("v2", "v3")],
            directed_edges=[("v1", "v2"), ("v1", "v3"), ("v2", "v4"), ("v3", "v4")],
        )
        seen = [v for c in chain_components(g) for v in c.vertices]
        assert sorted(seen) == sorted(g.vertices)


class TestVStructures:
    def test_collider(self):
        d = MixedGraph("abc", directed_edges=[("a", "b"), ("c", "b")])
        assert v_structures(d) == {("a", "b", "c")}

    def test_chain_has_none(self):
        d = MixedGraph("abc", directed_edges=[("a", "b"), ("b", "c")])
        assert v_structures(d) == frozenset()

    def test_members_of_chordal_class_have_none(self, diamond):
        for d in enumerate_mec(diamond).members:
            assert v_structures(d) == frozenset()

    def test_rejects_partially_directed(self):
        g = MixedGraph("abc", [("a", "b")], [("b", "c")])
        with pytest.raises(NotDagError):
            v_structures(g)


class TestMarkovEquivalent:
    def test_chain_vs_fork(self):
        d1 = MixedGraph("abc", directed_edges=[("a", "b"), ("b", "c")])
        d2 = MixedGraph("abc", directed_edges=[("b", "a"), ("b", "c")])
        assert markov_equivalent(d1, d2)

    def test_collider_differs_from_chain(self):
        d1 = MixedGraph("abc", directed_edges=[("a", "b"), ("c", "b")])
        d2 = MixedGraph("abc", directed_edges=[("a", "b"), ("b", "c")])
        assert not markov_equivalent(d1, d2)

    def test_class_members_pairwise_equivalent(self, diamond):
        members = enumerate_mec(diamond).members
        assert markov_equivalent(members[0], members[-1])

    def test_vertex_mismatch(self):
        d1 = MixedGraph("ab", directed_edges=[("a", "b")])
        d2 = MixedGraph("ac", directed_edges=[("a", "c")])
        with pytest.raises(VertexSetMismatchError):
            markov_equivalent(d1, d2)

    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(0, 10**6))
    def test_equivalence_relation_on_sampled_members(self, seed):
        from mecsize import sample_many

        g = random_uccg(6, 0.5, seed)
        d1, d2, d3 = sample_many(g, 3, seed)
        assert markov_equivalent(d1, d1)
        assert markov_equivalent(d1, d2) == markov_equivalent(d2, d1)
        if markov_equivalent(d1, d2) and markov_equivalent(d2, d3):
            assert markov_equivalent(d1, d3)


class TestMeek:
    def test_rule1_orients_away(self):
        g = MixedGraph("abc", [("b", "c")], [("a", "b")])
        closed = meek_close(g)
        assert ("b", "c") in closed.directed_edges

    def test_diamond_sink_config_is_fixed_point(self, diamond):
        g = MixedGraph(
            diamond.vertices,
            undirected_edges=[("v2", "v3"), ("v2", "v4"), ("v3", "v4")],
            directed_edges=[("v2", "v1"), ("v3", "v1")],
        )
        closed = meek_close(g)
        assert closed.directed_edges == g.directed_edges
        assert closed.undirected_edges == g.undirected_edges

    def test_diamond_chain_config_fully_orients(self, diamond):
        g = MixedGraph(
            diamond.vertices,
            undirected_edges=[("v2", "v3"), ("v2", "v4"), ("v3", "v4")],
            directed_edges=[("v2", "v1"), ("v1", "v3")],
        )
        closed = meek_close(g)
        assert closed.undirected_edges == frozenset()
        assert closed.directed_edges == {
            ("v2", "v1"), ("v1", "v3"), ("v2", "v3"), ("v3", "v4"), ("v2", "v4"),
        }

    def test_skeleton_preserved_and_directed_superset(self, diamond):
        g = MixedGraph(
            diamond.vertices,
            undirected_edges=[("v2", "v3"), ("v2", "v4"), ("v3", "v4")],
            directed_edges=[("v1", "v2"), ("v1", "v3")],
        )
        closed = meek_close(g)
        assert closed.skeleton_edges == g.skeleton_edges
        assert closed.directed_edges >= g.directed_edges

    def test_rejects_directed_cycle(self):
        g = MixedGraph("abc", directed_edges=[("a", "b"), ("b", "c"), ("c", "a")])
        with pytest.raises(DirectedCycleError):
            meek_close(g)

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(0, 10**6), drop=st.integers(0, 5))
    def test_idempotent_on_partially_oriented_members(self, seed, drop):
        from mecsize import sample_dag

        g = random_uccg(6, 0.5, seed)
        d = sample_dag(g, seed)
        directed = sorted(d.directed_edges)
        kept = directed[drop:]
        dropped = [tuple(sorted(e)) for e in directed[:drop]]
        pdag = MixedGraph(g.vertices, undirected_edges=dropped, directed_edges=kept)
        once = meek_close(pdag)
        twice = meek_close(once)
        assert once == twice


class TestBfsLevels:
    def test_levels_partition_component(self, diamond):
        levels = bfs_levels(diamond, "v1")
        assert [sorted(l) for l in levels] == [["v1"], ["v2", "v3"], ["v4"]]

    def test_no_edge_skips_a_level(self, diamond):
        levels = bfs_levels(diamond, "v1")
        level_of = {v: i for i, l in enumerate(levels) for v in l}
        for u, v in diamond.undirected_edges:
            assert abs(level_of[u] - level_of[v]) <= 1


def test_is_dag():
    assert is_dag(MixedGraph("ab", directed_edges=[("a", "b")]))
    assert not is_dag(MixedGraph("ab", [("a", "b")]))
