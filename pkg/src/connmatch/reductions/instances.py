"""Source-problem instance types and generated-instance containers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from ..graphs import GraphError, VertexWeightedGraph, WeightedGraph


class ReductionError(GraphError):
    """Raised for malformed source instances or invalid certificates."""


@dataclass(frozen=True)
class Cnf:
    """A CNF formula; literals are non-zero ints whose sign is the polarity."""

    num_vars: int
    clauses: tuple

    def __post_init__(self):
        for clause in self.clauses:
            if not clause:
                raise ReductionError("empty clause")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ReductionError(f"literal {lit} out of range")

    @staticmethod
    def build(num_vars: int, clauses) -> "Cnf":
        return Cnf(num_vars, tuple(tuple(c) for c in clauses))

    def require_three_sat(self) -> None:
        for i, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise ReductionError(f"clause {i + 1} has {len(clause)} literals, need exactly 3")

    def is_monotone(self) -> bool:
        return all(all(l > 0 for l in c) or all(l < 0 for l in c) for c in self.clauses)

    def monotone_violation(self) -> Optional[int]:
        """1-based index of the first mixed-polarity clause, or None."""
        for i, clause in enumerate(self.clauses):
            if any(l > 0 for l in clause) and any(l < 0 for l in clause):
                return i + 1
        return None

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        if len(assignment) != self.num_vars:
            raise ReductionError("assignment length differs from variable count")
        for clause in self.clauses:
            if not any((lit > 0) == bool(assignment[abs(lit) - 1]) for lit in clause):
                return False
        return True


@dataclass(frozen=True)
class SteinerInstance:
    """Unweighted graph, terminal set, edge budget."""

    n: int
    edges: tuple  # (u, v) pairs, 0-based
    terminals: frozenset
    budget: int

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise ReductionError(f"bad edge ({u}, {v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ReductionError(f"parallel edge ({u}, {v})")
            seen.add(key)
        for t in self.terminals:
            if not (0 <= t < self.n):
                raise ReductionError(f"terminal {t} out of range")

    @staticmethod
    def build(n, edges, terminals, budget) -> "SteinerInstance":
        return SteinerInstance(n, tuple((min(u, v), max(u, v)) for u, v in edges), frozenset(terminals), budget)

    def as_graph(self) -> WeightedGraph:
        return WeightedGraph(self.n, [(u, v, 0) for u, v in self.edges])

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)


@dataclass(frozen=True)
class SetCoverInstance:
    """Universe 0..universe_size-1, family of member sets, size budget."""

    universe_size: int
    sets: tuple  # of frozensets
    budget: int

    def __post_init__(self):
        covered = set()
        for i, s in enumerate(self.sets):
            if not s:
                raise ReductionError(f"member set {i + 1} is empty")
            for e in s:
                if not (0 <= e < self.universe_size):
                    raise ReductionError(f"element {e} out of range in set {i + 1}")
            covered |= s
        missing = set(range(self.universe_size)) - covered
        if missing:
            raise ReductionError(f"element {min(missing)} is covered by no set")

    @staticmethod
    def build(universe_size, sets, budget) -> "SetCoverInstance":
        return SetCoverInstance(universe_size, tuple(frozenset(s) for s in sets), budget)


@dataclass
class LabeledInstance:
    """A generated instance: graph, target weight, vertex labels, provenance."""

    graph: Union[WeightedGraph, VertexWeightedGraph]
    k: int
    labels: dict  # vertex id -> label string
    kind: str
    source: object = None
    _by_label: dict = field(default=None, repr=False)

    def __post_init__(self):
        n = self.graph.n
        if sorted(self.labels) != list(range(n)):
            raise ReductionError("every vertex must carry exactly one label")
        if len(set(self.labels.values())) != n:
            raise ReductionError("labels must be injective")

    def vertex(self, label: str) -> int:
        if self._by_label is None:
            self._by_label = {lab: v for v, lab in self.labels.items()}
        try:
            return self._by_label[label]
        except KeyError:
            raise ReductionError(f"no vertex labeled {label!r}") from None

    def has_label(self, label: str) -> bool:
        if self._by_label is None:
            self._by_label = {lab: v for v, lab in self.labels.items()}
        return label in self._by_label


class InstanceBuilder:
    """Accumulates labeled vertices and deduplicated edges."""

    def __init__(self):
        self.labels: dict[int, str] = {}
        self._ids: dict[str, int] = {}
        self._edges: dict[tuple[int, int], int] = {}

    def vertex(self, label: str) -> int:
        if label in self._ids:
            return self._ids[label]
        v = len(self._ids)
        self._ids[label] = v
        self.labels[v] = label
        return v

    def edge(self, label_u: str, label_v: str, weight: int) -> None:
        u, v = self.vertex(label_u), self.vertex(label_v)
        if u == v:
            raise ReductionError(f"self-loop at {label_u!r}")
        key = (min(u, v), max(u, v))
        cur = self._edges.get(key)
        if cur is None:
            self._edges[key] = weight
        elif cur != weight:
            raise ReductionError(f"conflicting weights for edge {label_u!r}-{label_v!r}")

    def graph(self) -> WeightedGraph:
        return WeightedGraph(len(self._ids), [(u, v, w) for (u, v), w in self._edges.items()])
