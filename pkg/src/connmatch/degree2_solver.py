"""Linear-time maximum weight connected matching on paths and cycles.

A connected matching on a cycle saturates a contiguous arc, taking every
second edge. Fix an anchor edge: the candidates containing it take the
anchor plus alternating runs extending clockwise and counterclockwise, with
the total number of matched edges capped at ``n // 2``. Two directional
prefix-sum tables and one running maximum evaluate all of these in linear
time. Solutions avoiding both of two adjacent anchor edges leave their
shared vertex unsaturated, so deleting it reduces to the path (tree) case.
"""

from __future__ import annotations

from .graphs import GraphError, Matching, WeightedGraph
from .tree_solver import solve_tree


def _walk_cycle(g: WeightedGraph) -> tuple[list[int], list[int]]:
    """Vertex and edge sequences around the cycle, starting at vertex 0.

    ``edge_seq[i]`` joins ``vert_seq[i]`` and ``vert_seq[(i + 1) % n]``.
    """
    vert_seq = [0]
    edge_seq = [g.adj[0][0]]
    prev = 0
    cur = g.other(edge_seq[0], 0)
    while cur != 0:
        vert_seq.append(cur)
        e1, e2 = g.adj[cur]
        nxt_edge = e2 if g.other(e1, cur) == prev else e1
        edge_seq.append(nxt_edge)
        prev, cur = cur, g.other(nxt_edge, cur)
    return vert_seq, edge_seq


def _best_through_anchor(ws: list[int]) -> tuple[int, list[int]]:
    """Best alternating arc containing the last edge of the cyclic order ``ws``.

    Returns the arc weight and the chosen positions in ``ws``. Positions
    ``n-1-2t`` extend one way, ``2t-1`` the other; together with the anchor at
    most ``n // 2`` edges fit on the cycle.
    """
    n = len(ws)
    cap = n // 2 - 1  # non-anchor edges on top of the anchor
    forward = [0] * (cap + 1)
    backward = [0] * (cap + 1)
    for t in range(1, cap + 1):
        forward[t] = forward[t - 1] + ws[2 * t - 1]
        backward[t] = backward[t - 1] + ws[n - 1 - 2 * t]
    back_best = [0] * (cap + 1)
    back_arg = [0] * (cap + 1)
    for j in range(1, cap + 1):
        if backward[j] > back_best[j - 1]:
            back_best[j] = backward[j]
            back_arg[j] = j
        else:
            back_best[j] = back_best[j - 1]
            back_arg[j] = back_arg[j - 1]
    best = None
    best_i = best_j = 0
    for i in range(cap + 1):
        cand = forward[i] + back_best[cap - i]
        if best is None or cand > best:
            best = cand
            best_i, best_j = i, back_arg[cap - i]
    positions = [n - 1]
    positions += [2 * t - 1 for t in range(1, best_i + 1)]
    positions += [n - 1 - 2 * t for t in range(1, best_j + 1)]
    return ws[n - 1] + best, positions


def solve_cycle(g: WeightedGraph) -> tuple[int, Matching]:
    """Optimum connected matching weight and witness for a cycle graph."""
    if g.n < 3 or g.m != g.n or any(g.degree(v) != 2 for v in range(g.n)):
        raise GraphError("not a cycle graph")
    vert_seq, edge_seq = _walk_cycle(g)
    n = g.n
    if len(vert_seq) != n:
        raise GraphError("not a cycle graph: disconnected")
    ws = [g.weight(e) for e in edge_seq]

    candidates: list[tuple[int, list[int]]] = []

    w_a, pos_a = _best_through_anchor(ws)
    candidates.append((w_a, [edge_seq[p] for p in pos_a]))

    rotated = ws[-1:] + ws[:-1]  # cyclic order ending at the penultimate edge
    w_b, pos_b = _best_through_anchor(rotated)
    candidates.append((w_b, [edge_seq[(p + n - 1) % n] for p in pos_b]))

    # neither anchor edge used: their shared vertex vert_seq[n-1] is free
    path_edges = edge_seq[: n - 2]
    path = WeightedGraph(n - 1, [(t, t + 1, g.weight(e)) for t, e in enumerate(path_edges)])
    w_c, m_c = solve_tree(path)
    candidates.append((w_c, [path_edges[e] for e in m_c.edge_ids]))

    best_w, best_edges = max(candidates, key=lambda c: c[0])
    if best_w <= 0:
        return 0, Matching(g, [])
    return best_w, Matching(g, best_edges)


def solve_degree_two(g: WeightedGraph) -> tuple[int, Matching]:
    """Dispatch for connected graphs of maximum degree at most 2."""
    if g.max_degree() > 2:
        raise GraphError("graph has a vertex of degree greater than 2")
    if g.m == g.n and g.n >= 3:
        return solve_cycle(g)
    return solve_tree(g)  # paths, including the single-vertex case
