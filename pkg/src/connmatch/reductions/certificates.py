"""Bidirectional certificate translation for generated instances.

``lift_certificate`` turns a source-problem solution into a matching (or a
vertex set for the subgraph-flavored target) reaching the instance target
``k``; ``project_certificate`` recovers a source solution from any valid
certificate of weight at least ``k``. Both directions re-validate their
input and name the violated constraint on failure.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence, Union

from ..graphs import Matching, VertexWeightedGraph, induced_by_matching_connected
from .generators import steiner_parameters, _cycle_labels
from .instances import Cnf, LabeledInstance, ReductionError, SetCoverInstance, SteinerInstance


def _edge_id(inst: LabeledInstance, label_u: str, label_v: str) -> int:
    eid = inst.graph.edge_id(inst.vertex(label_u), inst.vertex(label_v))
    if eid is None:
        raise ReductionError(f"edge {label_u!r}-{label_v!r} does not exist")
    return eid


def _require_assignment(f: Cnf, assignment: Sequence[bool]) -> None:
    if len(assignment) != f.num_vars:
        raise ReductionError(
            f"assignment has {len(assignment)} values for {f.num_vars} variables"
        )
    for ci, clause in enumerate(f.clauses, start=1):
        if not any((lit > 0) == bool(assignment[abs(lit) - 1]) for lit in clause):
            raise ReductionError(f"assignment does not satisfy clause {ci}")


def _assignment_edges(inst: LabeledInstance, assignment, center_fmt: str, num_vars: int) -> list[int]:
    out = []
    for i in range(1, num_vars + 1):
        side = "+" if assignment[i - 1] else "-"
        out.append(_edge_id(inst, center_fmt.format(i=i), f"x.{i}{side}"))
    return out


def _vertex_subset_connected(g: VertexWeightedGraph, subset: frozenset) -> bool:
    if not subset:
        return True
    start = next(iter(subset))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u in subset and u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(subset)


# ---------------------------------------------------------------------------
# lifting source solutions into certificates


def lift_certificate(inst: LabeledInstance, source_solution) -> Union[Matching, frozenset]:
    kind = inst.kind
    if kind == "starlike":
        return _lift_sat(inst, source_solution, extra=[])
    if kind == "bip4":
        return _lift_sat(inst, source_solution, extra=[("h+", "h-")])
    if kind == "planar-bipartite":
        return _lift_planar_bipartite(inst, source_solution)
    if kind == "crosscomp":
        return _lift_crosscomp(inst, source_solution)
    if kind == "steiner":
        return _lift_steiner(inst, source_solution)
    if kind == "wcs-wcm":
        return _lift_wcs_wcm(inst, source_solution)
    if kind == "setcover-wcs":
        return _lift_setcover(inst, source_solution)
    raise ReductionError(f"unknown reduction kind {inst.kind!r}")


def _lift_sat(inst: LabeledInstance, assignment, extra) -> Matching:
    f: Cnf = inst.source
    _require_assignment(f, assignment)
    eids = _assignment_edges(inst, assignment, "x.{i}", f.num_vars)
    for ci in range(1, len(f.clauses) + 1):
        eids.append(_edge_id(inst, f"c.{ci}+", f"c.{ci}-"))
    for a, bb in extra:
        eids.append(_edge_id(inst, a, bb))
    return _checked_matching(inst, eids)


def _lift_planar_bipartite(inst: LabeledInstance, assignment) -> Matching:
    f: Cnf = inst.source
    _require_assignment(f, assignment)
    eids = _assignment_edges(inst, assignment, "x.{i}", f.num_vars)
    for i in range(1, f.num_vars + 1):
        eids.append(_edge_id(inst, f"v.{i}", f"u.{i}"))
    for ci in range(1, len(f.clauses) + 1):
        eids.append(_edge_id(inst, f"c.{ci}+", f"c.{ci}-"))
    return _checked_matching(inst, eids)


def _lift_crosscomp(inst: LabeledInstance, source_solution) -> Matching:
    try:
        assignment, ell = source_solution
    except (TypeError, ValueError):
        raise ReductionError("crosscomp solution must be (assignment, instance index)") from None
    instances = inst.source
    if not (1 <= ell <= len(instances)):
        raise ReductionError(f"instance index {ell} out of range")
    _require_assignment(instances[ell - 1], assignment)
    eids = _assignment_edges(inst, assignment, "x.{i}*", instances[ell - 1].num_vars)
    cj = 1
    while inst.has_label(f"c.{cj}+"):
        eids.append(_edge_id(inst, f"c.{cj}+", f"c.{cj}-"))
        cj += 1
    eids.append(_edge_id(inst, "h+", "h-"))
    eids.append(_edge_id(inst, "q", f"y.{ell}"))
    return _checked_matching(inst, eids)


def _normalize_tree(inst: SteinerInstance, edges: Iterable) -> tuple[frozenset, tuple]:
    tree_edges = []
    present = {(min(u, v), max(u, v)) for u, v in inst.edges}
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key not in present:
            raise ReductionError(f"tree edge ({u}, {v}) is not a source edge")
        tree_edges.append(key)
    if len(set(tree_edges)) != len(tree_edges):
        raise ReductionError("tree repeats an edge")
    verts = {x for e in tree_edges for x in e}
    if not tree_edges:
        verts = set(inst.terminals)
        if len(verts) != 1:
            raise ReductionError("an edgeless tree can only cover a single terminal")
    if len(tree_edges) != len(verts) - 1:
        raise ReductionError("edge set is not a tree (wrong edge count)")
    adj = {v: [] for v in verts}
    for u, v in tree_edges:
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(verts))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != len(verts):
        raise ReductionError("edge set is not a tree (disconnected)")
    if not inst.terminals <= verts:
        missing = min(inst.terminals - verts)
        raise ReductionError(f"tree misses terminal {missing}")
    if len(tree_edges) > inst.budget:
        raise ReductionError(f"tree has {len(tree_edges)} edges, budget is {inst.budget}")
    return frozenset(verts), tuple(sorted(tree_edges))


def _lift_steiner(inst: LabeledInstance, source_solution) -> Matching:
    src: SteinerInstance = inst.source
    verts, tree_edges = _normalize_tree(src, source_solution)
    q, p, r, _ = steiner_parameters(src)
    eids = []
    for w in sorted(verts):
        length = 2 * r if w in src.terminals else 2 * q
        labels = _cycle_labels(src, w, length)
        for t in range(0, length, 2):
            eids.append(_edge_id(inst, labels[t], labels[t + 1]))
    for w, u in tree_edges:
        path = [f"path.{w + 1}.{u + 1}.{t}" for t in range(2 * p)]
        for t in range(0, 2 * p, 2):
            eids.append(_edge_id(inst, path[t], path[t + 1]))
    return _checked_matching(inst, eids)


def _lift_wcs_wcm(inst: LabeledInstance, source_solution) -> Matching:
    gvw: VertexWeightedGraph = inst.source
    subset = frozenset(source_solution)
    for v in subset:
        if not (0 <= v < gvw.n):
            raise ReductionError(f"vertex {v} out of range")
    if not _vertex_subset_connected(gvw, subset):
        raise ReductionError("source vertex set does not induce a connected subgraph")
    total = sum(gvw.vertex_weights[v] for v in subset)
    if total < inst.k:
        raise ReductionError(f"source vertex set weighs {total}, below target {inst.k}")
    eids = [_edge_id(inst, f"vert.{w + 1}", f"pair.{w + 1}") for w in sorted(subset)]
    return _checked_matching(inst, eids)


def _lift_setcover(inst: LabeledInstance, source_solution) -> frozenset:
    src: SetCoverInstance = inst.source
    chosen = sorted(set(source_solution))
    for j in chosen:
        if not (0 <= j < len(src.sets)):
            raise ReductionError(f"set index {j} out of range")
    covered = set().union(*(src.sets[j] for j in chosen)) if chosen else set()
    if covered != set(range(src.universe_size)):
        missing = min(set(range(src.universe_size)) - covered)
        raise ReductionError(f"element {missing} is not covered")
    if len(chosen) > src.budget:
        raise ReductionError(f"{len(chosen)} sets exceed the budget {src.budget}")
    verts = {inst.vertex("h+")}
    for u in range(1, src.universe_size + 1):
        verts.add(inst.vertex(f"x.{u}"))
    for j in chosen:
        verts.add(inst.vertex(f"c.{j + 1}+"))
    subset = frozenset(verts)
    total = sum(inst.graph.vertex_weights[v] for v in subset)
    if total < inst.k or not _vertex_subset_connected(inst.graph, subset):
        raise ReductionError("internal error: lifted subgraph certificate is invalid")
    return subset


def _checked_matching(inst: LabeledInstance, eids) -> Matching:
    m = Matching(inst.graph, eids)
    if m.weight < inst.k:
        raise ReductionError(f"internal error: lifted matching weighs {m.weight} < k={inst.k}")
    if not induced_by_matching_connected(inst.graph, m):
        raise ReductionError("internal error: lifted matching is not connected")
    return m


# ---------------------------------------------------------------------------
# projecting certificates back onto source solutions


def project_certificate(inst: LabeledInstance, certificate):
    kind = inst.kind
    if kind in ("starlike", "bip4", "planar-bipartite"):
        m = _checked_certificate(inst, certificate)
        return _project_assignment(inst, inst.source, m)
    if kind == "crosscomp":
        return _project_crosscomp(inst, certificate)
    if kind == "steiner":
        return _project_steiner(inst, certificate)
    if kind == "wcs-wcm":
        return _project_wcs_wcm(inst, certificate)
    if kind == "setcover-wcs":
        return _project_setcover(inst, certificate)
    raise ReductionError(f"unknown reduction kind {inst.kind!r}")


def _checked_certificate(inst: LabeledInstance, m: Matching) -> Matching:
    if m.graph != inst.graph:
        raise ReductionError("certificate belongs to a different graph")
    if m.weight < inst.k:
        raise ReductionError(f"certificate weighs {m.weight}, below target {inst.k}")
    if not induced_by_matching_connected(inst.graph, m):
        raise ReductionError("certificate is not a connected matching")
    return m


def _project_assignment(inst: LabeledInstance, f: Cnf, m: Matching) -> tuple:
    assignment = tuple(
        inst.vertex(f"x.{i}+") in m.vertices for i in range(1, f.num_vars + 1)
    )
    _require_assignment(f, assignment)
    return assignment


def _project_crosscomp(inst: LabeledInstance, certificate) -> tuple:
    m = _checked_certificate(inst, certificate)
    instances = inst.source
    vq = inst.vertex("q")
    ell = None
    for ell_try in range(1, len(instances) + 1):
        eid = inst.graph.edge_id(vq, inst.vertex(f"y.{ell_try}"))
        if eid is not None and eid in m.edge_ids:
            ell = ell_try
            break
    if ell is None:
        raise ReductionError("certificate does not match the selector hub to any leaf")
    assignment = tuple(
        inst.graph.edge_id(inst.vertex(f"x.{i}*"), inst.vertex(f"x.{i}+")) in m.edge_ids
        for i in range(1, instances[0].num_vars + 1)
    )
    _require_assignment(instances[ell - 1], assignment)
    return assignment, ell


def _project_steiner(inst: LabeledInstance, certificate) -> tuple[frozenset, tuple]:
    m = _checked_certificate(inst, certificate)
    src: SteinerInstance = inst.source
    q, p, r, _ = steiner_parameters(src)
    touched = set()
    for w in range(src.n):
        length = 2 * r if w in src.terminals else 2 * q
        labels = _cycle_labels(src, w, length)
        if any(inst.vertex(lab) in m.vertices for lab in labels):
            touched.add(w)
    tree_edges = []
    for w, u in src.edges:
        path = [f"path.{w + 1}.{u + 1}.{t}" for t in range(2 * p)]
        if all(inst.vertex(lab) in m.vertices for lab in path):
            tree_edges.append((w, u))
    missing = src.terminals - touched
    if missing:
        raise ReductionError(f"certificate leaves terminal {min(missing)} untouched")
    # the saturated paths may close cycles; keep a spanning forest restricted
    # to touched vertices, then check it is a single tree over them
    adj = {v: [] for v in touched}
    for w, u in tree_edges:
        if w in touched and u in touched:
            adj[w].append(u)
            adj[u].append(w)
    start = min(touched)
    seen = {start}
    queue = deque([start])
    kept = []
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                kept.append((min(x, y), max(x, y)))
                queue.append(y)
    if seen != touched:
        raise ReductionError("touched replacement cycles are not tree-connected")
    if len(kept) > src.budget:
        raise ReductionError(f"certificate spends {len(kept)} edges, budget is {src.budget}")
    return frozenset(touched), tuple(sorted(kept))


def _project_wcs_wcm(inst: LabeledInstance, certificate) -> frozenset:
    m = _checked_certificate(inst, certificate)
    gvw: VertexWeightedGraph = inst.source
    subset = set()
    for w in range(gvw.n):
        eid = inst.graph.edge_id(inst.vertex(f"vert.{w + 1}"), inst.vertex(f"pair.{w + 1}"))
        if eid in m.edge_ids:
            subset.add(w)
    subset = frozenset(subset)
    total = sum(gvw.vertex_weights[v] for v in subset)
    if total < inst.k:
        raise ReductionError(f"projected vertex set weighs {total}, below target {inst.k}")
    if not _vertex_subset_connected(gvw, subset):
        raise ReductionError("projected vertex set is not connected in the source graph")
    return subset


def _project_setcover(inst: LabeledInstance, certificate) -> frozenset:
    subset = frozenset(certificate)
    g: VertexWeightedGraph = inst.graph
    for v in subset:
        if not (0 <= v < g.n):
            raise ReductionError(f"vertex {v} out of range")
    total = sum(g.vertex_weights[v] for v in subset)
    if total < inst.k:
        raise ReductionError(f"certificate weighs {total}, below target {inst.k}")
    if not _vertex_subset_connected(g, subset):
        raise ReductionError("certificate is not connected")
    src: SetCoverInstance = inst.source
    chosen = frozenset(
        j for j in range(len(src.sets)) if inst.vertex(f"c.{j + 1}+") in subset
    )
    covered = set().union(*(src.sets[j] for j in chosen)) if chosen else set()
    if covered != set(range(src.universe_size)):
        missing = min(set(range(src.universe_size)) - covered)
        raise ReductionError(f"projected family leaves element {missing} uncovered")
    if len(chosen) > src.budget:
        raise ReductionError(f"projected family has {len(chosen)} sets, budget {src.budget}")
    return chosen
