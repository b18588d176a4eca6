"""Shared helpers: random instance builders and independent reference checks.

The reference implementations here are intentionally naive (subset loops,
vertex-deletion counting) so they stay independent of the library code they
validate.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations

from connmatch.graphs import VertexWeightedGraph, WeightedGraph


def path_graph(weights):
    return WeightedGraph(len(weights) + 1, [(i, i + 1, w) for i, w in enumerate(weights)])


def cycle_graph(weights):
    n = len(weights)
    edges = [(i, (i + 1) % n, w) for i, w in enumerate(weights)]
    return WeightedGraph(n, edges)


def complete_graph(n, weight_of):
    return WeightedGraph(n, [(u, v, weight_of(u, v)) for u, v in combinations(range(n), 2)])


def star_graph(weights):
    return WeightedGraph(len(weights) + 1, [(0, i + 1, w) for i, w in enumerate(weights)])


def random_tree(rng: random.Random, n: int, wlo: int = -10, whi: int = 10) -> WeightedGraph:
    edges = []
    for v in range(1, n):
        u = rng.randrange(v)
        edges.append((u, v, rng.randint(wlo, whi)))
    return WeightedGraph(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra: int, wlo: int = -10, whi: int = 10) -> WeightedGraph:
    tree = random_tree(rng, n, wlo, whi)
    edges = list(tree.edges)
    present = {(u, v) for u, v, _ in edges}
    candidates = [(u, v) for u, v in combinations(range(n), 2) if (u, v) not in present]
    rng.shuffle(candidates)
    for u, v in candidates[:extra]:
        edges.append((u, v, rng.randint(wlo, whi)))
    return WeightedGraph(n, edges)


def random_chordal_graph(rng: random.Random, n: int, wlo: int = 0, whi: int = 10) -> WeightedGraph:
    """Grow a connected chordal graph: each new vertex attaches to a clique."""
    cliques = [[0]]
    edges = []
    for v in range(1, n):
        base = rng.choice(cliques)
        k = rng.randint(1, len(base))
        attach = rng.sample(base, k)
        for u in attach:
            edges.append((u, v, rng.randint(wlo, whi)))
        cliques.append(attach + [v])
    return WeightedGraph(n, edges)


def naive_mwcm(g: WeightedGraph):
    """Reference maximum weight connected matching: loop over all edge subsets."""
    best_w, best_set = 0, frozenset()
    for mask in range(1 << g.m):
        verts = set()
        ok = True
        w = 0
        eids = []
        for e in range(g.m):
            if mask >> e & 1:
                u, v, we = g.edges[e]
                if u in verts or v in verts:
                    ok = False
                    break
                verts.add(u)
                verts.add(v)
                w += we
                eids.append(e)
        if not ok or w <= best_w:
            continue
        if verts:
            start = next(iter(verts))
            seen = {start}
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for eid in g.adj[x]:
                    y = g.other(eid, x)
                    if y in verts and y not in seen:
                        seen.add(y)
                        queue.append(y)
            if len(seen) != len(verts):
                continue
        best_w, best_set = w, frozenset(eids)
    return best_w, best_set


def naive_wcs(g: VertexWeightedGraph):
    """Reference maximum weight connected subgraph via subset loop."""
    best = 0
    for mask in range(1 << g.n):
        verts = [v for v in range(g.n) if mask >> v & 1]
        if not verts:
            continue
        w = sum(g.vertex_weights[v] for v in verts)
        if w <= best:
            continue
        vset = set(verts)
        seen = {verts[0]}
        queue = deque([verts[0]])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y in vset and y not in seen:
                    seen.add(y)
                    queue.append(y)
        if len(seen) == len(vset):
            best = w
    return best


def brute_articulations(g: WeightedGraph) -> set[int]:
    def ncomp(vertices):
        vset = set(vertices)
        seen = set()
        comps = 0
        for s in vertices:
            if s in seen:
                continue
            comps += 1
            seen.add(s)
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for eid in g.adj[x]:
                    y = g.other(eid, x)
                    if y in vset and y not in seen:
                        seen.add(y)
                        queue.append(y)
        return comps

    base = ncomp(list(range(g.n)))
    out = set()
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        if not rest:
            continue
        if ncomp(rest) > base:
            out.add(v)
    return out


def brute_is_chordal(g: WeightedGraph) -> bool:
    """Chordal iff no vertex subset of size >= 4 induces a cycle."""
    for k in range(4, g.n + 1):
        for subset in combinations(range(g.n), k):
            sub, _, _ = g.induced(subset)
            if sub.m == sub.n and all(sub.degree(v) == 2 for v in range(sub.n)):
                from connmatch.graphs import is_connected

                if is_connected(sub):
                    return False
    return True
