import random

import pytest

from connmatch.graphs import WeightedGraph
from connmatch.treedecomp import (
    NiceTreeDecomposition,
    TdError,
    TreeDecomposition,
    heuristic_td,
    make_nice,
    validate_td,
)
from conftest import complete_graph, cycle_graph, path_graph, random_connected_graph, random_tree


class TestValidate:
    def test_p3(self):
        g = path_graph([1, 1])
        td = TreeDecomposition.build([{0, 1}, {1, 2}], [(0, 1)])
        assert validate_td(g, td) == 1

    def test_k4_single_bag(self):
        g = complete_graph(4, lambda u, v: 1)
        td = TreeDecomposition.build([{0, 1, 2, 3}], [])
        assert validate_td(g, td) == 3

    def test_missing_edge_reported(self):
        g = cycle_graph([1, 1, 1])
        td = TreeDecomposition.build([{0, 1}, {1, 2}], [(0, 1)])
        with pytest.raises(TdError, match=r"edge \(0, 2\)"):
            validate_td(g, td)

    def test_missing_vertex_reported(self):
        g = path_graph([1, 1])
        td = TreeDecomposition.build([{0, 1}], [])
        with pytest.raises(TdError, match="vertex 2"):
            validate_td(g, td)

    def test_disconnected_occurrence_reported(self):
        g = path_graph([1, 1, 1])
        td = TreeDecomposition.build([{0, 1}, {1, 2}, {2, 3, 0}], [(0, 1), (1, 2)])
        with pytest.raises(TdError, match="occurrence connectivity"):
            validate_td(g, td)

    def test_non_tree_rejected(self):
        g = path_graph([1])
        td = TreeDecomposition.build([{0, 1}, {0, 1}, {0, 1}], [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(TdError, match="not a tree"):
            validate_td(g, td)


class TestHeuristic:
    def test_tree_width_one(self):
        rng = random.Random(3)
        for _ in range(10):
            g = random_tree(rng, rng.randint(2, 20))
            for method in ("min-degree", "min-fill"):
                td = heuristic_td(g, method)
                assert validate_td(g, td) == 1

    def test_cycle_width_two(self):
        for n in range(3, 12):
            td = heuristic_td(cycle_graph([1] * n), "min-degree")
            assert validate_td(cycle_graph([1] * n), td) == 2

    def test_complete_graph(self):
        g = complete_graph(5, lambda u, v: 1)
        td = heuristic_td(g)
        assert validate_td(g, td) == 4

    def test_always_valid_on_random_graphs(self):
        rng = random.Random(44)
        for _ in range(100):
            n = rng.randint(1, 30)
            g = random_connected_graph(rng, n, rng.randint(0, n))
            method = "min-fill" if rng.random() < 0.5 else "min-degree"
            td = heuristic_td(g, method)
            assert validate_td(g, td) >= 0


def check_nice_invariants(g: WeightedGraph, nd: NiceTreeDecomposition):
    # axioms still hold
    assert validate_td(g, nd.as_tree_decomposition()) == nd.width
    forgotten = []
    for i, node in enumerate(nd.nodes):
        kids = node.children
        if node.kind == "leaf":
            assert not kids and not node.bag
        elif node.kind == "introduce":
            (c,) = kids
            assert node.bag - nd.nodes[c].bag == {node.vertex}
            assert nd.nodes[c].bag < node.bag
        elif node.kind == "forget":
            (c,) = kids
            assert nd.nodes[c].bag - node.bag == {node.vertex}
            assert node.bag < nd.nodes[c].bag
            forgotten.append(node.vertex)
        elif node.kind == "join":
            a, b = kids
            assert nd.nodes[a].bag == nd.nodes[b].bag == node.bag
        else:
            raise AssertionError(node.kind)
    root = nd.nodes[nd.root]
    assert root.kind == "forget" and root.vertex == nd.pi and not root.bag
    assert sorted(forgotten) == list(range(g.n))  # each vertex forgotten once


class TestMakeNice:
    def test_single_bag_shape(self):
        g = path_graph([4])
        td = TreeDecomposition.build([{0, 1}], [])
        nd = make_nice(td, pi=0)
        kinds = [nd.nodes[i].kind for i in nd.postorder()]
        assert kinds == ["leaf", "introduce", "introduce", "forget", "forget"]
        check_nice_invariants(g, nd)
        root = nd.nodes[nd.root]
        assert nd.nodes[root.children[0]].bag == {0}

    def test_join_synthesis(self):
        g = WeightedGraph(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)])
        td = TreeDecomposition.build([{0, 1}, {0, 2}, {0, 3}], [(0, 1), (0, 2)])
        nd = make_nice(td, pi=0)
        assert any(node.kind == "join" for node in nd.nodes)
        check_nice_invariants(g, nd)

    def test_rerooting_preserves_width(self):
        rng = random.Random(5)
        for _ in range(20):
            n = rng.randint(2, 12)
            g = random_connected_graph(rng, n, rng.randint(0, 6))
            td = heuristic_td(g)
            widths = set()
            for pi in range(n):
                nd = make_nice(td, pi)
                check_nice_invariants(g, nd)
                widths.add(nd.width)
            assert widths == {td.width}

    def test_unknown_pi_rejected(self):
        td = TreeDecomposition.build([{0, 1}], [])
        with pytest.raises(TdError):
            make_nice(td, pi=7)
