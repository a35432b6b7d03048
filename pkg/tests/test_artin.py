import networkx as nx
import pytest

from jumploci.artin import (
    Graph,
    LabeledGraph,
    artin_malcev_verdict,
    braid_graph,
    is_complete_multipartite,
    maximal_disconnected_subsets,
    odd_contraction,
    raag_charvar_member,
    raag_charvar_subtori,
    raag_presentation,
    raag_resonance,
    raag_serre_verdict,
)
from jumploci.cupdata import cup_product_join, cup_raag, cup_wedge
from jumploci.errors import InputError, ResourceBoundError
from jumploci.resonance import resonance_member
from jumploci.subspaces import Subspace

from oracles import is_complete_multipartite_nx, maximal_disconnected_bruteforce


def renamed(g, prefix):
    return Graph.from_indices(g.n, g.edges, [f"{prefix}{i + 1}" for i in range(g.n)])


def names(g, sets):
    return [tuple(g.vertices[i] for i in s) for s in sets]


class TestGraph:
    def test_rejects_loops_and_unknown_vertices(self):
        with pytest.raises(InputError):
            Graph(["a"], [["a", "a"]])
        with pytest.raises(InputError):
            Graph(["a"], [["a", "b"]])

    def test_complement_and_join(self):
        g = Graph.path(3)
        assert g.complement().edges == ((0, 2),)
        j = renamed(Graph.discrete(2), "a").join(renamed(Graph.discrete(2), "b"))
        assert len(j.edges) == 4


class TestSubsets:
    def test_k3(self):
        assert maximal_disconnected_subsets(Graph.complete(3)) == []

    def test_p3(self):
        assert maximal_disconnected_subsets(Graph.path(3)) == [("v1", "v3")]

    def test_c4(self):
        assert maximal_disconnected_subsets(Graph.cycle(4)) == [("v1", "v3"), ("v2", "v4")]

    @pytest.mark.parametrize("index", range(1, 53, 5))
    def test_against_bruteforce(self, index):
        G = nx.graph_atlas(index)
        g = Graph.from_indices(G.number_of_nodes(), G.edges())
        assert maximal_disconnected_subsets(g) == names(g, maximal_disconnected_bruteforce(g))

    def test_vertex_bound(self):
        with pytest.raises(ResourceBoundError):
            maximal_disconnected_subsets(Graph.discrete(5), bound=4)


class TestLoci:
    def test_resonance_of_c4(self):
        arr = raag_resonance(Graph.cycle(4))
        assert set(arr) == {Subspace.coordinate(4, [0, 2]), Subspace.coordinate(4, [1, 3])}

    def test_resonance_of_complete_graph(self):
        assert list(raag_resonance(Graph.complete(3))) == [Subspace.zero(3)]

    def test_subtori(self):
        assert raag_charvar_subtori(Graph.path(3)) == [("v1", "v3")]
        assert raag_charvar_member(Graph.cycle(4), [2, 1, 3, 1])
        assert not raag_charvar_member(Graph.cycle(4), [2, 3, 1, 1])

    def test_presentations(self):
        assert raag_presentation(Graph.complete(2)).relator_strings() == ["v1 v2 v1^-1 v2^-1"]
        assert raag_presentation(Graph.discrete(2)).r == 0
        assert raag_presentation(Graph.cycle(4)).r == 4

    def test_disjoint_union_is_wedge(self):
        a, b = renamed(Graph.path(3), "a"), renamed(Graph.complete(2), "b")
        assert cup_raag(a.disjoint_union(b)) == cup_wedge(cup_raag(a), cup_raag(b))

    def test_join_is_product(self):
        a, b = renamed(Graph.discrete(2), "a"), renamed(Graph.path(3), "b")
        joined = cup_raag(a.join(b))
        prod = cup_product_join(cup_raag(a), cup_raag(b))
        for z in ([1, 2, 0, 0, 0], [0, 0, 1, 0, 3], [1, 0, 1, 0, 0], [0, 0, 1, 1, 1]):
            assert resonance_member(joined, z, 1) == resonance_member(prod, z, 1)

    def test_disjoint_union_resonant_everywhere(self):
        g = renamed(Graph.cycle(4), "a").disjoint_union(renamed(Graph.complete(2), "b"))
        c = cup_raag(g)
        for z in ([1, 2, 3, 4, 5, 6], [0, 0, 0, 0, 1, -1], [1, 0, 0, 0, 0, 0]):
            assert resonance_member(c, z, 1)


class TestMultipartite:
    def test_c4(self):
        ok, parts = is_complete_multipartite(Graph.cycle(4))
        assert ok and sorted(parts) == [("v1", "v3"), ("v2", "v4")]

    def test_p4_witness(self):
        g = Graph.path(4)
        ok, (a, b, c) = is_complete_multipartite(g)
        assert not ok
        ia, ib, ic = g.index(a), g.index(b), g.index(c)
        assert g.adjacent(ia, ic) and not g.adjacent(ia, ib) and not g.adjacent(ib, ic)

    def test_complete(self):
        ok, parts = is_complete_multipartite(Graph.complete(4))
        assert ok and len(parts) == 4

    @pytest.mark.parametrize("index", range(1, 53))
    def test_against_networkx(self, index):
        G = nx.graph_atlas(index)
        g = Graph.from_indices(G.number_of_nodes(), G.edges())
        assert is_complete_multipartite(g)[0] == is_complete_multipartite_nx(g)


class TestVerdicts:
    def test_c4(self):
        v = raag_serre_verdict(Graph.cycle(4))
        assert v["quasi_kahler"] and not v["kahler"]

    def test_k4_k3(self):
        assert raag_serre_verdict(Graph.complete(4))["kahler"]
        assert not raag_serre_verdict(Graph.complete(3))["kahler"]
        assert raag_serre_verdict(Graph.complete(3))["quasi_kahler"]

    def test_p4(self):
        v = raag_serre_verdict(Graph.path(4))
        assert not v["quasi_kahler"] and not v["kahler"]

    def test_braid_contracts_to_point(self):
        for n in range(3, 7):
            lg = braid_graph(n)
            c = odd_contraction(lg)
            assert c.n == 1 and not c.edges
            assert artin_malcev_verdict(lg)["verdict"]

    def test_even_labels_unchanged(self):
        g = Graph.path(4)
        lg = LabeledGraph(g, {e: 4 for e in g.edges})
        assert odd_contraction(lg).edges == g.edges
        assert not artin_malcev_verdict(lg)["verdict"]

    def test_triangle_with_one_odd_edge(self):
        lg = LabeledGraph(Graph.complete(3), {(0, 1): 3})
        c = odd_contraction(lg)
        assert c.n == 2 and len(c.edges) == 1

    def test_all_odd_connected(self):
        g = Graph.path(5)
        assert artin_malcev_verdict(LabeledGraph(g, {e: 5 for e in g.edges}))["verdict"]

    def test_contraction_idempotent_on_unlabeled(self):
        g = Graph.cycle(5)
        assert odd_contraction(LabeledGraph.unlabeled(g)).edges == g.edges

    def test_label_must_be_at_least_two(self):
        with pytest.raises(InputError):
            LabeledGraph(Graph.complete(2), {(0, 1): 1})
