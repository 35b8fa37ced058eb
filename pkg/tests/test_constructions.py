import itertools

import pytest

from chromadisc import (Graph, chromatic_number, clique_number, dirac_join,
                        discrepancy_of_coloring, generalized_mycielski,
                        has_cycle_of_length, is_proper, local_colourability,
                        mycielski_graph, mycielskian, parse_graph6,
                        spectrum_gadget, write_graph6, SubsetChi)


class TestMycielskiTower:
    def test_level_three_is_the_five_cycle(self):
        g = mycielski_graph(3).graph
        assert g.n == 5 and g.edge_count() == 5
        assert all(g.degree(v) == 2 for v in range(5))

    def test_sizes_follow_the_tower_formula(self):
        for k in range(2, 7):
            g = mycielski_graph(k).graph
            assert g.n == 3 * 2 ** (k - 2) - 1

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_chromatic_number_is_level(self, k):
        assert chromatic_number(mycielski_graph(k).graph) == k

    @pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
    def test_triangle_free(self, k):
        assert not has_cycle_of_length(mycielski_graph(k).graph, 3)

    def test_level_four_frozen_encoding(self):
        assert write_graph6(mycielski_graph(4).graph) == "JkLTAQGK?N_"

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_canonical_coloring_proper_with_k_classes(self, k):
        built = mycielski_graph(k)
        assert built.canonical.p == k
        assert is_proper(built.graph, built.canonical)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_canonical_coloring_has_no_independent_transversal(self, k):
        built = mycielski_graph(k)
        g, pc = built.graph, built.canonical
        for choice in itertools.product(
                *[[v for v in range(g.n) if c >> v & 1] for c in pc.classes]):
            if all(not g.has_edge(u, v)
                   for u, v in itertools.combinations(choice, 2)):
                pytest.fail(f"independent transversal {choice}")

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            mycielski_graph(7)
        with pytest.raises(ValueError):
            mycielski_graph(1)


class TestGeneralizedTower:
    def test_base_level_is_complete(self):
        built = generalized_mycielski(3, 3)
        assert built.graph.adj == Graph.complete(3).adj
        assert built.canonical.p == 3

    def test_frozen_encoding_and_classes(self):
        built = generalized_mycielski(4, 3)
        assert write_graph6(built.graph) == "Fzj?w"
        assert built.canonical.to_vertex_lists() == [[0], [1], [2, 6], [3, 4, 5]]

    @pytest.mark.parametrize("k,s", [(3, 2), (4, 2), (4, 3), (5, 3), (5, 4)])
    def test_growth_invariants(self, k, s):
        built = generalized_mycielski(k, s)
        g, pc = built.graph, built.canonical
        assert chromatic_number(g) == k
        assert clique_number(g) == s
        assert local_colourability(g) == s
        assert is_proper(g, pc) and pc.p == k

    @pytest.mark.parametrize("k,s", [(4, 2), (4, 3), (5, 3)])
    def test_base_palette_subsets_are_cliques(self, k, s):
        built = generalized_mycielski(k, s)
        g, pc = built.graph, built.canonical
        label = pc.labels(g.n)
        low = set(range(s - 1))
        for r in range(1, g.n + 1):
            for vs in itertools.combinations(range(g.n), r):
                if {label[v] for v in vs} == low:
                    assert all(g.has_edge(u, v)
                               for u, v in itertools.combinations(vs, 2))

    def test_low_classes_stay_singletons(self):
        built = generalized_mycielski(5, 3)
        sizes = [c.bit_count() for c in built.canonical.classes]
        # the s-1 base classes never grow; apexes land in class s-1,
        # each level's twins form one new class
        assert sorted(sizes) == [1, 1, 3, 3, 7]
        assert sizes[0] == sizes[1] == 1

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            generalized_mycielski(3, 1)
        with pytest.raises(ValueError):
            generalized_mycielski(2, 3)


class TestJoinAndGadget:
    def test_join_adds_chromatic_numbers(self, c5):
        j = dirac_join(c5, Graph.complete(2))
        assert chromatic_number(j) == 5
        assert j.n == 7 and j.edge_count() == 5 + 1 + 10

    def test_join_of_empties_is_complete_bipartite(self):
        j = dirac_join(Graph.empty(2), Graph.empty(3))
        assert j.adj == Graph.complete_bipartite(2, 3).adj

    def test_gadget_shape(self, c5):
        g, pc = spectrum_gadget(c5, 2)
        assert g.n == 7
        assert g.degree(5) == 0 and g.degree(6) == 0
        assert pc.p == chromatic_number(c5) + 2
        assert is_proper(g, pc)

    def test_gadget_discrepancy_point(self):
        g, pc = spectrum_gadget(Graph.complete(3), 2)
        val, _ = discrepancy_of_coloring(g, pc, SubsetChi(g))
        assert val == 2

    def test_gadget_validation(self):
        with pytest.raises(ValueError):
            spectrum_gadget(Graph.empty(0), 1)
        with pytest.raises(ValueError):
            spectrum_gadget(Graph.complete(3), 0)
