"""A tour of the exact solvers on small instances.

Each solver is run on an instance from its graph class and cross-checked
against the brute-force oracle. Run as: python demos/solvers_tour.py
"""

import random

from connmatch import (
    WeightedGraph,
    brute_mwcm,
    dispatch_solve,
    solve_chordal,
    solve_degree_two,
    solve_tree,
    solve_treewidth,
)

rng = random.Random(7)

print("== trees ==")
tree = WeightedGraph(6, [(0, 1, 4), (0, 2, -2), (2, 3, 5), (2, 4, 3), (4, 5, -1)])
w, m = solve_tree(tree)
print(f"optimum {w} via {m.edge_pairs()}  (oracle: {brute_mwcm(tree).optimum})")

print("\n== cycles ==")
cycle = WeightedGraph(6, [(i, (i + 1) % 6, rng.randint(-5, 8)) for i in range(6)])
w, m = solve_degree_two(cycle)
print(f"weights {[e[2] for e in cycle.edges]}")
print(f"optimum {w} via {m.edge_pairs()}  (oracle: {brute_mwcm(cycle).optimum})")

print("\n== chordal graphs, non-negative weights ==")
chordal = WeightedGraph(
    6,
    [(0, 1, 3), (0, 2, 1), (1, 2, 6), (1, 3, 2), (2, 3, 4), (3, 4, 0), (3, 5, 7), (4, 5, 2)],
)
w, m = solve_chordal(chordal)
print(f"optimum {w} via {m.edge_pairs()}  (oracle: {brute_mwcm(chordal).optimum})")

print("\n== treewidth DP on an arbitrary graph ==")
dense = WeightedGraph(
    8,
    [(u, v, rng.randint(-6, 6)) for u in range(8) for v in range(u + 1, 8) if rng.random() < 0.5],
)
w, m = solve_treewidth(dense)
print(f"optimum {w} via {m.edge_pairs()}  (oracle: {brute_mwcm(dense, edge_limit=40).optimum})")

print("\n== automatic dispatch ==")
for g, name in [(tree, "tree"), (cycle, "cycle"), (chordal, "chordal"), (dense, "general")]:
    w, _ = dispatch_solve(g)
    print(f"{name:8s} -> {w}")
