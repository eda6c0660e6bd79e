import random

import pytest

from swissfair import matching
from swissfair.matching import (
    Matching,
    WeightedGraph,
    max_cardinality_max_weight_matching,
    max_weight_matching,
)
from swissfair.matching import _blossom as py_kernel

from helpers import brute_force_best_matching, check_matching_valid, random_graph

try:
    from swissfair.matching import _blossom_cy as cy_kernel
except ImportError:
    cy_kernel = None


class TestWeightedGraphValidation:
    def test_normalises_and_sorts(self):
        g = WeightedGraph(3, [(2, 1, 5), (1, 0, 3)])
        assert g.edges == ((0, 1, 3), (1, 2, 5))

    @pytest.mark.parametrize(
        "edges",
        [
            [(0, 0, 1)],  # loop
            [(0, 1, -2)],  # negative weight
            [(0, 3, 1)],  # out of range
            [(0, 1, 1), (1, 0, 2)],  # duplicate unordered pair
            [(0, 1, 1.5)],  # non-integer weight
        ],
    )
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(ValueError):
            WeightedGraph(3, edges)


class TestMaxWeightMatching:
    def test_single_edge(self):
        got = max_weight_matching(WeightedGraph(2, [(0, 1, 7)]))
        assert got == Matching(pairs=frozenset({(0, 1)}), total_weight=7)

    def test_k4_prefers_disjoint_heavy_pair(self):
        edges = [(0, 1, 10), (2, 3, 10), (0, 2, 9), (1, 3, 9), (0, 3, 1), (1, 2, 1)]
        got = max_weight_matching(WeightedGraph(4, edges))
        assert got.pairs == {(0, 1), (2, 3)}
        assert got.total_weight == 20

    def test_path_takes_heavier_edge(self):
        got = max_weight_matching(WeightedGraph(3, [(0, 1, 5), (1, 2, 6)]))
        assert got.pairs == {(1, 2)}
        assert got.total_weight == 6

    def test_empty_graph(self):
        got = max_weight_matching(WeightedGraph(4, []))
        assert got.pairs == frozenset() and got.total_weight == 0

    def test_brute_force_oracle(self):
        rng = random.Random(424242)
        for _ in range(300):
            n, edges = random_graph(rng)
            g = WeightedGraph(n, edges)
            got = max_weight_matching(g)
            check_matching_valid(g.edges, got)
            best_weight, _ = brute_force_best_matching(n, list(g.edges))
            assert got.total_weight == best_weight

    def test_deterministic_under_edge_permutation(self):
        rng = random.Random(99)
        for _ in range(50):
            n, edges = random_graph(rng, max_nodes=10)
            reference = max_weight_matching(WeightedGraph(n, edges))
            shuffled = list(edges)
            rng.shuffle(shuffled)
            again = max_weight_matching(WeightedGraph(n, shuffled))
            assert again.pairs == reference.pairs


class TestMaxCardinality:
    def test_path_single_edge_is_maximum_cardinality(self):
        got = max_cardinality_max_weight_matching(
            WeightedGraph(3, [(0, 1, 5), (1, 2, 6)])
        )
        assert got.pairs == {(1, 2)}

    def test_cycle_two_edges_beat_heavy_single(self):
        edges = [(0, 1, 100), (1, 2, 1), (2, 3, 1), (3, 0, 1)]
        got = max_cardinality_max_weight_matching(WeightedGraph(4, edges))
        assert got.pairs == {(0, 1), (2, 3)}
        assert got.total_weight == 101

    def test_edgeless(self):
        got = max_cardinality_max_weight_matching(WeightedGraph(4, []))
        assert got.pairs == frozenset()

    def test_brute_force_cardinality_oracle(self):
        rng = random.Random(31)
        for _ in range(300):
            n, edges = random_graph(rng)
            g = WeightedGraph(n, edges)
            got = max_cardinality_max_weight_matching(g)
            check_matching_valid(g.edges, got)
            _, (best_card, best_weight) = brute_force_best_matching(n, list(g.edges))
            assert (len(got.pairs), got.total_weight) == (best_card, best_weight)


def test_networkx_agreement_on_medium_graphs():
    nx = pytest.importorskip("networkx")
    rng = random.Random(1234)
    for _ in range(60):
        n, edges = random_graph(rng, max_nodes=40, max_weight=1000)
        g = WeightedGraph(n, edges)
        got = max_weight_matching(g)
        graph = nx.Graph()
        graph.add_nodes_from(range(n))
        graph.add_weighted_edges_from(edges)
        reference = nx.max_weight_matching(graph, maxcardinality=False)
        weight_of = {(u, v): w for u, v, w in g.edges}
        ref_weight = sum(weight_of[(min(a, b), max(a, b))] for a, b in reference)
        assert got.total_weight == ref_weight


@pytest.mark.skipif(cy_kernel is None, reason="compiled kernel not built")
def test_kernels_bit_identical():
    rng = random.Random(777)
    for _ in range(200):
        n, edges = random_graph(rng, max_nodes=24, max_weight=10**9)
        rng.shuffle(edges)
        us = [e[0] for e in edges]
        vs = [e[1] for e in edges]
        ws = [e[2] for e in edges]
        assert py_kernel.solve(n, us, vs, ws) == cy_kernel.solve(n, us, vs, ws)


def test_backend_reported():
    assert matching.BACKEND in ("python", "cython")
