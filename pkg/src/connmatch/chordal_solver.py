"""Polynomial maximum weight connected matching on chordal graphs with
non-negative weights.

The input is completed to a full graph of even order (padding vertex plus
fill edges), a maximum weight perfect matching of the completion is computed,
and the answer is read back: keep the matched pairs that are original edges,
then greedily saturate leftover vertex pairs joined by weight-0 original
edges.

Fill edges generally carry weight 0, with one exception: fills incident to
an articulation point are priced below any achievable matching weight. A
perfect matching that saturates every articulation through original edges
always exists (pair each articulation into one of its blocks along the
block-cutpoint tree), so the penalty edges are never chosen; without the
penalty, the perfect matching may park an articulation on a fill edge and
the extracted matching can come out disconnected or overweighted. The
extraction never loses weight and the result is connected; both facts are
asserted on every run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .graphs import (
    GraphError,
    Matching,
    WeightedGraph,
    articulation_points,
    chordal_peo,
    induced_by_matching_connected,
    is_connected,
)


@dataclass(frozen=True)
class ChordalCompletion:
    """A graph padded to even order and completed with fill edges."""

    base: WeightedGraph
    completed: WeightedGraph
    parity_vertex: Optional[int]
    fill_edge_ids: frozenset  # completed-graph edge ids absent from the base
    articulation_penalty: int  # weight of fill edges touching articulations


def build_gp(g: WeightedGraph) -> ChordalCompletion:
    """Complete ``g`` to a full graph of even order.

    Fill edges weigh 0 except those incident to an articulation point of
    ``g``, which get a prohibitive negative weight so a maximum weight
    perfect matching always saturates articulations through original edges.
    """
    np_ = g.n if g.n % 2 == 0 else g.n + 1
    parity = None if np_ == g.n else g.n
    arts = articulation_points(g)
    penalty = -(1 + sum(w for _, _, w in g.edges if w > 0))
    original = {(u, v): w for u, v, w in g.edges}
    edges = []
    fill = []
    for u in range(np_):
        for v in range(u + 1, np_):
            if (u, v) in original:
                edges.append((u, v, original[(u, v)]))
            else:
                fill.append(len(edges))
                w = penalty if (u in arts or v in arts) else 0
                edges.append((u, v, w))
    return ChordalCompletion(
        base=g,
        completed=WeightedGraph(np_, edges),
        parity_vertex=parity,
        fill_edge_ids=frozenset(fill),
        articulation_penalty=penalty,
    )


def max_weight_perfect_matching(g: WeightedGraph) -> Matching:
    """Exact maximum weight perfect matching (blossom algorithm).

    Raises if the vertex count is odd or no perfect matching exists.
    """
    if g.n % 2 != 0:
        raise GraphError("no perfect matching: odd number of vertices")
    if g.n == 0:
        return Matching(g, [])
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    for u, v, w in g.edges:
        nxg.add_edge(u, v, weight=w)
    pairs = nx.max_weight_matching(nxg, maxcardinality=True)
    if 2 * len(pairs) != g.n:
        raise GraphError("no perfect matching exists")
    eids = []
    for u, v in pairs:
        eid = g.edge_id(u, v)
        assert eid is not None
        eids.append(eid)
    return Matching(g, eids)


def solve_chordal(g: WeightedGraph) -> tuple[int, Matching]:
    """Optimum connected matching on a connected chordal graph, weights >= 0."""
    if g.n == 0 or not is_connected(g):
        raise GraphError("chordal solver needs a connected non-empty graph")
    if any(w < 0 for _, _, w in g.edges):
        raise GraphError("chordal solver requires non-negative weights")
    if chordal_peo(g) is None:
        raise GraphError("graph is not chordal")

    comp = build_gp(g)
    mp = max_weight_perfect_matching(comp.completed)

    eids = []
    saturated = set()
    for cid in mp.edge_ids:
        if cid in comp.fill_edge_ids:
            continue
        u, v = comp.completed.endpoints(cid)
        eid = g.edge_id(u, v)
        assert eid is not None
        eids.append(eid)
        saturated.update((u, v))
    # saturate a maximal set of weight-0 original edges over free vertices,
    # scanning in ascending endpoint order for determinism
    for eid, (u, v, w) in enumerate(g.edges):
        if w == 0 and u not in saturated and v not in saturated:
            eids.append(eid)
            saturated.update((u, v))

    matching = Matching(g, eids)
    if matching.weight != mp.weight:
        raise GraphError("internal error: extraction changed the matching weight")
    if not induced_by_matching_connected(g, matching):
        raise GraphError("internal error: extracted matching is not connected")
    return matching.weight, matching
