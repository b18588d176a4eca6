"""Plain-text file formats.

All formats are newline-delimited UTF-8 with ``c``-prefixed comment lines
and 1-based vertex ids externally (0-based in memory):

* graphs (``.gr``): ``p wcm <n> <m>`` then exactly m lines ``e <u> <v> <w>``
* CNF (DIMACS): ``p cnf <vars> <clauses>``, clauses 0-terminated
* Steiner: ``p steiner <n> <m>``, ``e u v``, ``t v``, ``k <int>``
* set cover: ``p setcover <q> <p>``, ``s <elements...>``, ``k <int>``
* vertex-weighted graphs (``.wcs``): ``p wcs <n> <m>``, ``v <id> <w>``, ``e u v``
* tree decompositions (``.td``, PACE style): ``s td <bags> <width+1> <n>``,
  ``b <id> <vertices...>``, then bag-tree edge lines ``<i> <j>``
* matching certificates: ``m <u> <v>`` lines
* label maps: ``map <id> <label>`` lines

Parsers report the offending line number; writers emit canonical output
(sorted edge lists) so a parse/write round trip is byte-stable.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .graphs import GraphError, Matching, VertexWeightedGraph, WeightedGraph
from .reductions import Cnf, SetCoverInstance, SteinerInstance
from .treedecomp import TreeDecomposition

_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1


class FormatError(GraphError):
    """Malformed input file; the message carries the line number."""


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield no, line.split()


def _int(tok: str, no: int, what: str = "integer") -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {no}: expected {what}, got {tok!r}") from None


def _read(path) -> str:
    return Path(path).read_text(encoding="utf-8")


# ---------------------------------------------------------------------------
# graphs


def parse_graph_text(text: str) -> WeightedGraph:
    n = m = None
    edges = []
    seen = {}
    for no, toks in _lines(text):
        if toks[0] == "p":
            if n is not None:
                raise FormatError(f"line {no}: duplicate header")
            if len(toks) != 4 or toks[1] != "wcm":
                raise FormatError(f"line {no}: expected 'p wcm <n> <m>'")
            n, m = _int(toks[2], no), _int(toks[3], no)
        elif toks[0] == "e":
            if n is None:
                raise FormatError(f"line {no}: edge before header")
            if len(toks) != 4:
                raise FormatError(f"line {no}: expected 'e <u> <v> <w>'")
            u, v, w = (_int(t, no) for t in toks[1:])
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"line {no}: vertex out of range 1..{n}")
            if u == v:
                raise FormatError(f"line {no}: self-loop at vertex {u}")
            if not (_INT64_MIN <= w <= _INT64_MAX):
                raise FormatError(f"line {no}: weight outside the signed 64-bit range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise FormatError(f"line {no}: duplicate edge ({u}, {v}), first on line {seen[key]}")
            seen[key] = no
            edges.append((u - 1, v - 1, w))
        else:
            raise FormatError(f"line {no}: unknown directive {toks[0]!r}")
    if n is None:
        raise FormatError("missing 'p wcm' header")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, file has {len(edges)}")
    return WeightedGraph(n, edges)


def parse_graph(path) -> WeightedGraph:
    return parse_graph_text(_read(path))


def write_graph_text(g: WeightedGraph) -> str:
    out = [f"p wcm {g.n} {g.m}"]
    for u, v, w in sorted(g.edges):
        out.append(f"e {u + 1} {v + 1} {w}")
    return "\n".join(out) + "\n"


def write_graph(g: WeightedGraph, path) -> None:
    Path(path).write_text(write_graph_text(g), encoding="utf-8")


# ---------------------------------------------------------------------------
# CNF


def parse_cnf_text(text: str) -> Cnf:
    nvars = nclauses = None
    clauses = []
    current = []
    for no, toks in _lines(text):
        if toks[0] == "p":
            if len(toks) != 4 or toks[1] != "cnf":
                raise FormatError(f"line {no}: expected 'p cnf <vars> <clauses>'")
            nvars, nclauses = _int(toks[2], no), _int(toks[3], no)
            continue
        if nvars is None:
            raise FormatError(f"line {no}: clause before header")
        for tok in toks:
            lit = _int(tok, no, "literal")
            if lit == 0:
                if not current:
                    raise FormatError(f"line {no}: empty clause")
                clauses.append(tuple(current))
                current = []
            else:
                if abs(lit) > nvars:
                    raise FormatError(f"line {no}: literal {lit} out of range")
                current.append(lit)
    if current:
        raise FormatError("unterminated clause at end of file")
    if nvars is None:
        raise FormatError("missing 'p cnf' header")
    if nclauses is not None and len(clauses) != nclauses:
        raise FormatError(f"header announces {nclauses} clauses, file has {len(clauses)}")
    return Cnf.build(nvars, clauses)


def parse_cnf(path) -> Cnf:
    return parse_cnf_text(_read(path))


def write_cnf_text(f: Cnf) -> str:
    out = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    for clause in f.clauses:
        out.append(" ".join(str(l) for l in clause) + " 0")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Steiner


def parse_steiner_text(text: str) -> SteinerInstance:
    n = m = None
    edges = []
    terminals = []
    budget = None
    for no, toks in _lines(text):
        kind = toks[0]
        if kind == "p":
            if len(toks) != 4 or toks[1] != "steiner":
                raise FormatError(f"line {no}: expected 'p steiner <n> <m>'")
            n, m = _int(toks[2], no), _int(toks[3], no)
        elif kind == "e":
            if n is None or len(toks) != 3:
                raise FormatError(f"line {no}: expected 'e <u> <v>' after the header")
            u, v = _int(toks[1], no), _int(toks[2], no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"line {no}: vertex out of range 1..{n}")
            edges.append((u - 1, v - 1))
        elif kind == "t":
            if n is None or len(toks) != 2:
                raise FormatError(f"line {no}: expected 't <v>' after the header")
            t = _int(toks[1], no)
            if not (1 <= t <= n):
                raise FormatError(f"line {no}: terminal {t} out of range 1..{n}")
            terminals.append(t - 1)
        elif kind == "k":
            budget = _int(toks[1], no)
        else:
            raise FormatError(f"line {no}: unknown directive {kind!r}")
    if n is None:
        raise FormatError("missing 'p steiner' header")
    if budget is None:
        raise FormatError("missing 'k' line")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, file has {len(edges)}")
    return SteinerInstance.build(n, edges, terminals, budget)


def parse_steiner(path) -> SteinerInstance:
    return parse_steiner_text(_read(path))


# ---------------------------------------------------------------------------
# set cover


def parse_setcover_text(text: str) -> SetCoverInstance:
    q = p = None
    sets = []
    budget = None
    for no, toks in _lines(text):
        kind = toks[0]
        if kind == "p":
            if len(toks) != 4 or toks[1] != "setcover":
                raise FormatError(f"line {no}: expected 'p setcover <q> <p>'")
            q, p = _int(toks[2], no), _int(toks[3], no)
        elif kind == "s":
            if q is None:
                raise FormatError(f"line {no}: set before header")
            elems = [_int(t, no) for t in toks[1:]]
            for e in elems:
                if not (1 <= e <= q):
                    raise FormatError(f"line {no}: element {e} out of range 1..{q}")
            sets.append({e - 1 for e in elems})
        elif kind == "k":
            budget = _int(toks[1], no)
        else:
            raise FormatError(f"line {no}: unknown directive {kind!r}")
    if q is None:
        raise FormatError("missing 'p setcover' header")
    if budget is None:
        raise FormatError("missing 'k' line")
    if p is not None and len(sets) != p:
        raise FormatError(f"header announces {p} sets, file has {len(sets)}")
    return SetCoverInstance.build(q, sets, budget)


def parse_setcover(path) -> SetCoverInstance:
    return parse_setcover_text(_read(path))


# ---------------------------------------------------------------------------
# vertex-weighted graphs


def parse_wcs_text(text: str) -> VertexWeightedGraph:
    n = m = None
    weights = None
    got_weight = None
    edges = []
    for no, toks in _lines(text):
        kind = toks[0]
        if kind == "p":
            if len(toks) != 4 or toks[1] != "wcs":
                raise FormatError(f"line {no}: expected 'p wcs <n> <m>'")
            n, m = _int(toks[2], no), _int(toks[3], no)
            weights = [0] * n
            got_weight = [False] * n
        elif kind == "v":
            if n is None or len(toks) != 3:
                raise FormatError(f"line {no}: expected 'v <id> <w>' after the header")
            v, w = _int(toks[1], no), _int(toks[2], no)
            if not (1 <= v <= n):
                raise FormatError(f"line {no}: vertex {v} out of range 1..{n}")
            if not (_INT64_MIN <= w <= _INT64_MAX):
                raise FormatError(f"line {no}: weight outside the signed 64-bit range")
            if got_weight[v - 1]:
                raise FormatError(f"line {no}: duplicate weight for vertex {v}")
            weights[v - 1] = w
            got_weight[v - 1] = True
        elif kind == "e":
            if n is None or len(toks) != 3:
                raise FormatError(f"line {no}: expected 'e <u> <v>' after the header")
            u, v = _int(toks[1], no), _int(toks[2], no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"line {no}: vertex out of range 1..{n}")
            if u == v:
                raise FormatError(f"line {no}: self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(f"line {no}: unknown directive {kind!r}")
    if n is None:
        raise FormatError("missing 'p wcs' header")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, file has {len(edges)}")
    missing = [i + 1 for i, ok in enumerate(got_weight) if not ok]
    if missing:
        raise FormatError(f"vertex {missing[0]} has no weight line")
    return VertexWeightedGraph(n, edges, weights)


def parse_wcs(path) -> VertexWeightedGraph:
    return parse_wcs_text(_read(path))


def write_wcs_text(g: VertexWeightedGraph) -> str:
    out = [f"p wcs {g.n} {len(g.edges)}"]
    for v, w in enumerate(g.vertex_weights):
        out.append(f"v {v + 1} {w}")
    for u, v in sorted(g.edges):
        out.append(f"e {u + 1} {v + 1}")
    return "\n".join(out) + "\n"


def write_wcs(g: VertexWeightedGraph, path) -> None:
    Path(path).write_text(write_wcs_text(g), encoding="utf-8")


# ---------------------------------------------------------------------------
# tree decompositions (PACE 2017 style)


def parse_td_text(text: str) -> TreeDecomposition:
    nbags = n = None
    bags: dict[int, set] = {}
    tree_edges = []
    for no, toks in _lines(text):
        kind = toks[0]
        if kind == "s":
            if len(toks) != 5 or toks[1] != "td":
                raise FormatError(f"line {no}: expected 's td <bags> <width+1> <n>'")
            nbags, n = _int(toks[2], no), _int(toks[4], no)
        elif kind == "b":
            if nbags is None:
                raise FormatError(f"line {no}: bag before the 's td' header")
            bag_id = _int(toks[1], no)
            if not (1 <= bag_id <= nbags):
                raise FormatError(f"line {no}: bag id {bag_id} out of range 1..{nbags}")
            if bag_id in bags:
                raise FormatError(f"line {no}: duplicate bag {bag_id}")
            verts = [_int(t, no) for t in toks[2:]]
            for v in verts:
                if not (1 <= v <= n):
                    raise FormatError(f"line {no}: vertex {v} out of range 1..{n}")
            bags[bag_id] = {v - 1 for v in verts}
        else:
            if nbags is None:
                raise FormatError(f"line {no}: edge before the 's td' header")
            if len(toks) != 2:
                raise FormatError(f"line {no}: expected a bag-tree edge '<i> <j>'")
            i, j = _int(toks[0], no), _int(toks[1], no)
            if not (1 <= i <= nbags and 1 <= j <= nbags):
                raise FormatError(f"line {no}: bag id out of range 1..{nbags}")
            tree_edges.append((i - 1, j - 1))
    if nbags is None:
        raise FormatError("missing 's td' header")
    missing = [i for i in range(1, nbags + 1) if i not in bags]
    if missing:
        raise FormatError(f"bag {missing[0]} has no 'b' line")
    return TreeDecomposition.build([bags[i] for i in range(1, nbags + 1)], tree_edges)


def parse_td(path) -> TreeDecomposition:
    return parse_td_text(_read(path))


def write_td_text(td: TreeDecomposition, n: int) -> str:
    out = [f"s td {len(td.bags)} {td.width + 1} {n}"]
    for i, bag in enumerate(td.bags, start=1):
        out.append("b " + " ".join([str(i)] + [str(v + 1) for v in sorted(bag)]))
    for i, j in sorted(td.tree_edges):
        out.append(f"{i + 1} {j + 1}")
    return "\n".join(out) + "\n"


def write_td(td: TreeDecomposition, n: int, path) -> None:
    Path(path).write_text(write_td_text(td, n), encoding="utf-8")


# ---------------------------------------------------------------------------
# certificates and label maps


def parse_certificate_text(text: str, g: WeightedGraph) -> Matching:
    eids = []
    for no, toks in _lines(text):
        if toks[0] != "m" or len(toks) != 3:
            raise FormatError(f"line {no}: expected 'm <u> <v>'")
        u, v = _int(toks[1], no), _int(toks[2], no)
        if not (1 <= u <= g.n and 1 <= v <= g.n):
            raise FormatError(f"line {no}: vertex out of range 1..{g.n}")
        eid = g.edge_id(u - 1, v - 1)
        if eid is None:
            raise FormatError(f"line {no}: edge ({u}, {v}) is not in the graph")
        eids.append(eid)
    return Matching(g, eids)


def parse_certificate(path, g: WeightedGraph) -> Matching:
    return parse_certificate_text(_read(path), g)


def write_certificate_text(m: Matching) -> str:
    out = []
    for u, v in sorted(m.edge_pairs()):
        out.append(f"m {u + 1} {v + 1}")
    return "\n".join(out) + ("\n" if out else "")


def write_certificate(m: Matching, path) -> None:
    Path(path).write_text(write_certificate_text(m), encoding="utf-8")


def parse_vertex_set_text(text: str, g: VertexWeightedGraph) -> frozenset:
    verts = []
    for no, toks in _lines(text):
        if toks[0] != "v":
            raise FormatError(f"line {no}: expected 'v <ids...>'")
        for tok in toks[1:]:
            v = _int(tok, no)
            if not (1 <= v <= g.n):
                raise FormatError(f"line {no}: vertex {v} out of range 1..{g.n}")
            verts.append(v - 1)
    return frozenset(verts)


def write_vertex_set_text(subset) -> str:
    if not subset:
        return "v\n"
    return "v " + " ".join(str(v + 1) for v in sorted(subset)) + "\n"


# ---------------------------------------------------------------------------
# source-solution files (used by the certificate mapper)
#
#   assignment:  "a 0 1 1 ..."  (one 0/1 per variable; crosscomp solutions
#                add a line "i <instance>")
#   steiner tree: "e <u> <v>" lines
#   set family:   "s <indices...>" (1-based member-set indices)
#   vertex set:   "v <ids...>"


def parse_assignment_text(text: str) -> tuple[tuple, Union[int, None]]:
    assignment = None
    instance = None
    for no, toks in _lines(text):
        if toks[0] == "a":
            vals = []
            for tok in toks[1:]:
                if tok not in ("0", "1"):
                    raise FormatError(f"line {no}: assignment values must be 0 or 1")
                vals.append(tok == "1")
            assignment = tuple(vals)
        elif toks[0] == "i":
            instance = _int(toks[1], no)
        else:
            raise FormatError(f"line {no}: expected 'a <bits...>' or 'i <instance>'")
    if assignment is None:
        raise FormatError("missing 'a' assignment line")
    return assignment, instance


def write_assignment_text(assignment, instance: Union[int, None] = None) -> str:
    out = ["a " + " ".join("1" if b else "0" for b in assignment)]
    if instance is not None:
        out.append(f"i {instance}")
    return "\n".join(out) + "\n"


def parse_tree_solution_text(text: str) -> list[tuple[int, int]]:
    edges = []
    for no, toks in _lines(text):
        if toks[0] != "e" or len(toks) != 3:
            raise FormatError(f"line {no}: expected 'e <u> <v>'")
        edges.append((_int(toks[1], no) - 1, _int(toks[2], no) - 1))
    return edges


def write_tree_solution_text(edges) -> str:
    out = [f"e {u + 1} {v + 1}" for u, v in sorted(edges)]
    return "\n".join(out) + ("\n" if out else "")


def parse_family_text(text: str) -> frozenset:
    chosen = []
    for no, toks in _lines(text):
        if toks[0] != "s":
            raise FormatError(f"line {no}: expected 's <indices...>'")
        chosen.extend(_int(t, no) - 1 for t in toks[1:])
    return frozenset(chosen)


def write_family_text(chosen) -> str:
    if not chosen:
        return "s\n"
    return "s " + " ".join(str(j + 1) for j in sorted(chosen)) + "\n"


def parse_map_text(text: str) -> dict:
    labels = {}
    for no, toks in _lines(text):
        if toks[0] != "map" or len(toks) != 3:
            raise FormatError(f"line {no}: expected 'map <id> <label>'")
        v = _int(toks[1], no)
        if v - 1 in labels:
            raise FormatError(f"line {no}: duplicate map entry for vertex {v}")
        labels[v - 1] = toks[2]
    return labels


def parse_map(path) -> dict:
    return parse_map_text(_read(path))


def write_map_text(labels: dict) -> str:
    out = []
    for v in sorted(labels):
        out.append(f"map {v + 1} {labels[v]}")
    return "\n".join(out) + "\n"


def write_map(labels: dict, path) -> None:
    Path(path).write_text(write_map_text(labels), encoding="utf-8")
