import random

import pytest

from connmatch.graphs import GraphError, WeightedGraph, induced_by_matching_connected
from connmatch.oracle import brute_mwcm
from connmatch.treedecomp import TreeDecomposition, heuristic_td, make_nice
from connmatch.treewidth_solver import _node_table, solve_treewidth
from conftest import cycle_graph, path_graph, random_connected_graph


class TestSpotValues:
    def test_single_edge(self):
        assert solve_treewidth(WeightedGraph(2, [(0, 1, 5)]))[0] == 5

    def test_p3(self):
        assert solve_treewidth(path_graph([2, 3]))[0] == 3

    def test_c4_with_width2_td(self):
        g = cycle_graph([1, 1, 1, 1])
        td = TreeDecomposition.build([{0, 1, 2}, {0, 2, 3}], [(0, 1)])
        w, m = solve_treewidth(g, td)
        assert w == 2
        assert len(m) == 2

    def test_single_vertex(self):
        g = WeightedGraph(1, [])
        td = TreeDecomposition.build([{0}], [])
        assert solve_treewidth(g, td)[0] == 0

    def test_negative_only(self):
        w, m = solve_treewidth(path_graph([-3, -1, -2]))
        assert w == 0 and len(m) == 0

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            solve_treewidth(WeightedGraph(4, [(0, 1, 1), (2, 3, 1)]))

    def test_invalid_td_rejected(self):
        g = cycle_graph([1, 1, 1])
        td = TreeDecomposition.build([{0, 1}, {1, 2}], [(0, 1)])
        with pytest.raises(GraphError):
            solve_treewidth(g, td)


class TestOracleEquivalence:
    def test_100_random_graphs(self):
        rng = random.Random(5150)
        for _ in range(100):
            n = rng.randint(1, 10)
            g = random_connected_graph(rng, n, rng.randint(0, 2 * n))
            td = heuristic_td(g)
            w, m = solve_treewidth(g, td)
            assert w == brute_mwcm(g, edge_limit=64).optimum
            assert m.weight == w
            assert induced_by_matching_connected(g, m)

    def test_pi_sweep_matches_default(self):
        rng = random.Random(616)
        for _ in range(40):
            n = rng.randint(1, 8)
            g = random_connected_graph(rng, n, rng.randint(0, n))
            td = heuristic_td(g)
            assert solve_treewidth(g, td)[0] == solve_treewidth(g, td, pi_sweep=True)[0]


def _tables_per_node(g, nd, use_reduce):
    """Replicate the bottom-up pass, recording each cell's best weight."""
    tables = {}
    snapshot = {}
    for x in nd.postorder():
        kids = nd.nodes[x].children
        tables[x] = _node_table(g, nd, x, [tables[c] for c in kids], use_reduce)
        snapshot[x] = {
            cell: max(w for w, _ in wps.entries.values())
            for cell, wps in tables[x].items()
            if wps.entries
        }
        for c in kids:
            del tables[c]
    return snapshot


class TestReduceSoundness:
    def test_reduce_on_off_identical_per_cell_optima(self):
        rng = random.Random(321)
        for _ in range(30):
            n = rng.randint(2, 8)
            g = random_connected_graph(rng, n, rng.randint(0, n))
            td = heuristic_td(g)
            nd = make_nice(td, 0)
            on = _tables_per_node(g, nd, True)
            off = _tables_per_node(g, nd, False)
            assert on.keys() == off.keys()
            for x in on:
                assert on[x] == off[x], f"node {x} differs"

    def test_size_bound_after_reduce(self):
        rng = random.Random(99)
        for _ in range(25):
            n = rng.randint(2, 9)
            g = random_connected_graph(rng, n, rng.randint(0, 2 * n))
            td = heuristic_td(g)
            nd = make_nice(td, 0)
            tables = {}
            for x in nd.postorder():
                kids = nd.nodes[x].children
                tables[x] = _node_table(g, nd, x, [tables[c] for c in kids], True)
                for cell, wps in tables[x].items():
                    ground = len(wps.ground)
                    assert len(wps) <= 1 << max(ground - 1, 0)
                for c in kids:
                    del tables[c]

    def test_reduce_on_off_same_answer(self):
        rng = random.Random(12321)
        for _ in range(40):
            n = rng.randint(1, 9)
            g = random_connected_graph(rng, n, rng.randint(0, n))
            td = heuristic_td(g)
            assert solve_treewidth(g, td)[0] == solve_treewidth(g, td, use_reduce=False)[0]
