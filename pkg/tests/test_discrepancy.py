import pytest
from hypothesis import given, strategies as st

from chromadisc import (Graph, SubsetChi, all_proper_partitions,
                        chromatic_discrepancy, chromatic_discrepancy_bruteforce,
                        chromatic_number, discrepancy_of_coloring,
                        discrepancy_of_coloring_bruteforce,
                        enumerate_labeled_graphs, f_value,
                        is_complete_multipartite, mycielski_graph,
                        optimal_coloring)
from conftest import graphs
from oracles import naive_phi, naive_phi_sigma


class TestColoringDiscrepancy:
    def test_exhaustive_tiny(self):
        for n in range(1, 5):
            for g in enumerate_labeled_graphs(n):
                cache = SubsetChi(g)
                for pc in all_proper_partitions(g):
                    want = naive_phi_sigma(g, pc.to_vertex_lists())
                    got, witness = discrepancy_of_coloring(g, pc, cache)
                    assert got == want
                    assert witness.is_valid(g)
                    assert witness.coloring == pc

    @given(graphs(min_n=1, max_n=5))
    def test_fast_equals_bruteforce_all_partitions(self, g):
        cache = SubsetChi(g)
        for pc in all_proper_partitions(g):
            fast, _ = discrepancy_of_coloring(g, pc, cache)
            assert fast == discrepancy_of_coloring_bruteforce(g, pc, cache)

    @given(graphs(min_n=1, max_n=6))
    def test_witness_reproduces_value(self, g):
        pc = optimal_coloring(g)
        cache = SubsetChi(g)
        val, witness = discrepancy_of_coloring(g, pc, cache)
        span = sum(1 for c in pc.classes if c & witness.vertices)
        assert span - cache.chi(witness.vertices) == val

    def test_rejects_improper_input(self, c5):
        from chromadisc import ProperColoring
        with pytest.raises(ValueError):
            discrepancy_of_coloring(c5, ProperColoring.from_classes([0b11111]))

    def test_rejects_empty_graph(self):
        from chromadisc import ProperColoring
        with pytest.raises(ValueError):
            discrepancy_of_coloring(Graph.empty(0), ProperColoring(()))


class TestGraphDiscrepancy:
    def test_exhaustive_tiny(self):
        for n in range(1, 5):
            for g in enumerate_labeled_graphs(n):
                assert chromatic_discrepancy(g).phi == naive_phi(g)

    @given(graphs(min_n=1, max_n=5))
    def test_matches_naive(self, g):
        assert chromatic_discrepancy(g).phi == naive_phi(g)

    @given(graphs(min_n=1, max_n=6))
    def test_agrees_with_package_bruteforce(self, g):
        assert chromatic_discrepancy(g).phi == chromatic_discrepancy_bruteforce(g)

    def test_known_values(self, c5, petersen, groetzsch):
        assert chromatic_discrepancy(c5).phi == 1
        assert chromatic_discrepancy(Graph.path(4)).phi == 1
        assert chromatic_discrepancy(petersen).phi == 2
        assert chromatic_discrepancy(groetzsch).phi == 2
        for n in range(1, 7):
            assert chromatic_discrepancy(Graph.complete(n)).phi == 0

    def test_witness_fields_consistent(self, petersen):
        res = chromatic_discrepancy(petersen)
        cache = SubsetChi(petersen)
        p = res.witness_coloring.p
        assert res.k == p - chromatic_number(petersen)
        assert p - cache.chi(res.witness_set) == res.phi
        blob = res.to_json(petersen)
        assert blob["phi"] == 2 and blob["p"] - blob["f"] == 2
        assert sorted(v for cls in blob["witness_classes"] for v in cls) == list(range(10))

    @given(graphs(min_n=1, max_n=6))
    def test_range_and_zero_characterisation(self, g):
        phi = chromatic_discrepancy(g).phi
        chi = chromatic_number(g)
        assert 0 <= phi <= max(chi - 1, 0)
        assert (phi == 0) == is_complete_multipartite(g)

    def test_rejects_empty_graph(self):
        with pytest.raises(ValueError):
            chromatic_discrepancy(Graph.empty(0))


class TestFValue:
    @given(graphs(min_n=1, max_n=5), st.integers(1, 5))
    def test_consistent_with_definition(self, g, p):
        chi = chromatic_number(g)
        if not chi <= p <= g.n:
            with pytest.raises(ValueError):
                f_value(g, p)
            return
        res = f_value(g, p)
        cache = SubsetChi(g)
        assert res.p == p
        # reported witness cover must be tight for its colouring
        spans_all = all(c & res.witness_cover for c in res.witness_coloring.classes)
        assert spans_all and cache.chi(res.witness_cover) == res.f
        # and no p-class colouring may do better than the reported max
        best = max(
            min(cache.chi(mask)
                for mask in range(1, g.vertices + 1)
                if all(c & mask for c in pc.classes))
            for pc in all_proper_partitions(g) if pc.p == p)
        assert res.f == best

    def test_minimum_over_p_is_phi(self, petersen):
        res = chromatic_discrepancy(petersen)
        chi = chromatic_number(petersen)
        vals = []
        for p in range(chi, 2 * chi):
            fr = f_value(petersen, p)
            vals.append(p - fr.f)
        assert min(vals) == res.phi

    def test_json_shape(self, c5):
        blob = f_value(c5, 3).to_json()
        assert set(blob) == {"p", "f", "witness_classes", "witness_cover"}

    def test_mycielski_known_points(self):
        # derived: cover cost stays at 2 for both class counts, so the
        # discrepancy minimum 4 - 2 = 2 is met already at p = chi
        g = mycielski_graph(4).graph
        assert f_value(g, 4).f == 2
        assert f_value(g, 5).f == 2
