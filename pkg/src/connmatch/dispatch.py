"""Solver selection.

``auto`` picks the cheapest applicable exact method per connected component:
trees, then paths/cycles, then chordal graphs with non-negative weights,
then brute force for small edge counts, and the treewidth DP for the rest.
A connected matching lives inside one component, so disconnected inputs are
solved per component and the maximum is returned.
"""

from __future__ import annotations

from typing import Optional

from .chordal_solver import solve_chordal
from .degree2_solver import solve_degree_two
from .graphs import GraphError, Matching, WeightedGraph, chordal_peo
from .oracle import brute_mwcm
from .tree_solver import solve_tree
from .treedecomp import TreeDecomposition, heuristic_td
from .treewidth_solver import solve_treewidth

SOLVERS = ("auto", "brute", "tree", "cycle", "chordal", "treewidth")


def _solve_component(
    g: WeightedGraph,
    solver: str,
    td: Optional[TreeDecomposition],
    brute_limit: int,
) -> tuple[int, Matching]:
    if solver == "tree":
        return solve_tree(g)
    if solver == "cycle":
        return solve_degree_two(g)
    if solver == "chordal":
        return solve_chordal(g)
    if solver == "brute":
        res = brute_mwcm(g, edge_limit=brute_limit)
        return res.optimum, res.witness
    if solver == "treewidth":
        return solve_treewidth(g, td)
    if solver != "auto":
        raise GraphError(f"unknown solver {solver!r}; choose one of {SOLVERS}")

    if g.m == g.n - 1:
        return solve_tree(g)
    if g.max_degree() <= 2:
        return solve_degree_two(g)
    if all(w >= 0 for _, _, w in g.edges) and chordal_peo(g) is not None:
        return solve_chordal(g)
    if g.m <= brute_limit:
        res = brute_mwcm(g, edge_limit=brute_limit)
        return res.optimum, res.witness
    return solve_treewidth(g, td if td is not None else heuristic_td(g))


def dispatch_solve(
    g: WeightedGraph,
    solver: str = "auto",
    td: Optional[TreeDecomposition] = None,
    brute_limit: int = 24,
) -> tuple[int, Matching]:
    """Solve ``g`` with the requested solver; disconnected inputs are solved
    per component and the best component answer is returned."""
    if solver not in SOLVERS:
        raise GraphError(f"unknown solver {solver!r}; choose one of {SOLVERS}")
    if g.n == 0:
        return 0, Matching(g, [])
    components = g.components()
    if len(components) == 1:
        return _solve_component(g, solver, td, brute_limit)
    if td is not None:
        raise GraphError("an explicit decomposition requires a connected graph")
    best_w = 0
    best: Matching = Matching(g, [])
    for comp in components:
        sub, _, edge_map = g.induced(comp)
        w, m = _solve_component(sub, solver, None, brute_limit)
        if w > best_w:
            best_w = w
            best = Matching(g, [edge_map[e] for e in m.edge_ids])
    return best_w, best
