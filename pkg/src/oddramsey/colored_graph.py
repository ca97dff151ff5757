"""Core value types: graphs, edge colorings, parity censuses, cycles/paths.

Vertices are dense integers ``0..n-1`` and colors are integers ``1..r``,
which keeps adjacency rows as plain bitmask ints and censuses as small
dicts.  All types are immutable values after construction; every operation
is a pure function, so instances can be shared freely across threads.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import PreconditionFailed


class Edge(NamedTuple):
    """An undirected edge, normalized so that ``u < v``."""

    u: int
    v: int


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair into an :class:`Edge`.

    Normalization is idempotent and rejects self-loops.
    """
    if u == v:
        raise PreconditionFailed(f"self-loop {u}-{v} is not an edge")
    return Edge(u, v) if u < v else Edge(v, u)


class SimpleGraph:
    """Undirected simple graph on vertices ``0..n-1`` with O(1) adjacency.

    Instances are immutable; "mutators" return new graphs.
    """

    __slots__ = ("n", "_rows", "_nbrs")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise PreconditionFailed("graph needs at least one vertex")
        self.n = n
        rows = [0] * n
        for a, b in edges:
            e = edge(a, b)
            if not (0 <= e.u and e.v < n):
                raise PreconditionFailed(f"edge {e} outside vertex range 0..{n - 1}")
            rows[e.u] |= 1 << e.v
            rows[e.v] |= 1 << e.u
        self._rows = tuple(rows)
        self._nbrs = tuple(
            tuple(v for v in range(n) if rows[u] >> v & 1) for u in range(n)
        )

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def mask(self, v: int) -> int:
        """Adjacency row of ``v`` as a bitmask int."""
        return self._rows[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def edges(self) -> Iterator[Edge]:
        for u in range(self.n):
            for v in self._nbrs[u]:
                if u < v:
                    yield Edge(u, v)

    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._nbrs) // 2

    def has_edge(self, e: Edge) -> bool:
        return self.adjacent(e.u, e.v)

    def is_complete(self) -> bool:
        return all(len(nb) == self.n - 1 for nb in self._nbrs)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "SimpleGraph":
        return SimpleGraph(self.n, list(self.edges()) + [tuple(e) for e in extra])

    def without_edge(self, e: Edge) -> "SimpleGraph":
        return SimpleGraph(self.n, (f for f in self.edges() if f != e))

    def induced(self, keep: Iterable[int]) -> tuple["SimpleGraph", list[int]]:
        """Induced subgraph on ``keep`` plus the new->old vertex id map."""
        old = sorted(set(keep))
        pos = {o: i for i, o in enumerate(old)}
        es = [
            (pos[a], pos[b])
            for a in old
            for b in self._nbrs[a]
            if b in pos and a < b
        ]
        return SimpleGraph(len(old), es), old

    def add_vertex_with_neighbors(self, nbrs: Iterable[int]) -> "SimpleGraph":
        """New graph on n+1 vertices; vertex ``n`` is joined to ``nbrs``."""
        w = self.n
        es = list(self.edges()) + [(x, w) for x in nbrs]
        return SimpleGraph(self.n + 1, es)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimpleGraph) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.edge_count()})"


def min_degree(g: SimpleGraph) -> int:
    return min(g.degree(v) for v in range(g.n))


@dataclass(frozen=True)
class ParityCensus:
    """Per-color edge counts of a designated edge set.

    Full counts are stored (not just parities) because the unique-color
    predicate needs "exactly once".  Colors absent from the edge set have
    count 0.
    """

    counts: dict[int, int] = field(default_factory=dict)

    def count(self, color: int) -> int:
        return self.counts.get(color, 0)

    @property
    def odd_colors(self) -> set[int]:
        return {c for c, k in self.counts.items() if k % 2 == 1}

    @property
    def unique_colors(self) -> set[int]:
        return {c for c, k in self.counts.items() if k == 1}

    def is_even_chromatic(self) -> bool:
        return not self.odd_colors

    def is_odd_chromatic(self) -> bool:
        return bool(self.odd_colors)

    def has_unique_color(self) -> bool:
        return bool(self.unique_colors)

    def total(self) -> int:
        return sum(self.counts.values())

    def __add__(self, other: "ParityCensus") -> "ParityCensus":
        return ParityCensus(dict(Counter(self.counts) + Counter(other.counts)))


class EdgeColoring:
    """A total map from the host graph's edges to colors ``1..r``."""

    __slots__ = ("host", "r", "_assignment")

    def __init__(self, host: SimpleGraph, r: int, assignment: dict[Edge, int]):
        if r < 1:
            raise PreconditionFailed("palette size must be at least 1")
        for e, c in assignment.items():
            if not host.has_edge(e):
                raise PreconditionFailed(f"colored edge {e} is not in the host graph")
            if not 1 <= c <= r:
                raise PreconditionFailed(f"color {c} outside palette 1..{r}")
        missing = host.edge_count() - len(assignment)
        if missing:
            raise PreconditionFailed(f"{missing} host edges left uncolored")
        self.host = host
        self.r = r
        self._assignment = dict(assignment)

    def color(self, u: int, v: int) -> int:
        return self._assignment[edge(u, v)]

    def color_of(self, e: Edge) -> int:
        return self._assignment[e]

    def items(self) -> Iterator[tuple[Edge, int]]:
        yield from sorted(self._assignment.items())

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.host.n}, r={self.r})"


@dataclass(frozen=True)
class CycleOrPath:
    """A vertex-distinct path, or a cycle when ``closed`` is True."""

    vertices: tuple[int, ...]
    closed: bool = False

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise PreconditionFailed("repeated vertex in cycle/path")
        if self.closed and len(self.vertices) < 3:
            raise PreconditionFailed("a cycle needs at least 3 vertices")

    def edges(self) -> list[Edge]:
        vs = self.vertices
        es = [edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        if self.closed:
            es.append(edge(vs[-1], vs[0]))
        return es

    @property
    def endpoints(self) -> tuple[int, int]:
        if self.closed:
            raise PreconditionFailed("a cycle has no endpoints")
        return self.vertices[0], self.vertices[-1]

    def is_hamilton(self, n: int) -> bool:
        return len(self.vertices) == n

    def reversed(self) -> "CycleOrPath":
        return CycleOrPath(tuple(reversed(self.vertices)), self.closed)

    def canonical(self) -> tuple[int, ...]:
        """Rotation/reflection-invariant form of a closed cycle."""
        if not self.closed:
            raise PreconditionFailed("canonical form is defined for cycles")
        vs = self.vertices
        k = len(vs)
        best = None
        for i in range(k):
            for step in (1, -1):
                cand = tuple(vs[(i + step * j) % k] for j in range(k))
                if best is None or cand < best:
                    best = cand
        return best

    def validate(self, g: SimpleGraph) -> None:
        """Check every consecutive pair is a host edge; raises otherwise."""
        for e in self.edges():
            if not g.has_edge(e):
                raise PreconditionFailed(f"edge {e} not present in host graph")


def parity_census(coloring: EdgeColoring, edges_: Iterable[Edge]) -> ParityCensus:
    """Count color occurrences over ``edges_`` (which must be host edges)."""
    counts: Counter[int] = Counter()
    for e in edges_:
        if not coloring.host.has_edge(e):
            raise PreconditionFailed(f"edge {e} is not in the coloring's host graph")
        counts[coloring.color_of(e)] += 1
    return ParityCensus(dict(counts))


def cycle_census(coloring: EdgeColoring, cycle: CycleOrPath) -> ParityCensus:
    return parity_census(coloring, cycle.edges())


def symmetric_difference(c1: CycleOrPath, c2: CycleOrPath) -> set[Edge]:
    """Edge set ``E(c1) xor E(c2)`` of two Hamilton cycles on one vertex set."""
    if not (c1.closed and c2.closed):
        raise PreconditionFailed("symmetric difference is defined for cycles")
    if set(c1.vertices) != set(c2.vertices):
        raise PreconditionFailed("cycles live on different vertex sets")
    return set(c1.edges()) ^ set(c2.edges())


# ---------------------------------------------------------------------------
# JSON instance format, shared by every module and the CLI:
#   {"n": <int>, "r": <int>, "edges": [{"u": <int>, "v": <int>, "c": <int>}]}
# Edges are listed once with u < v; for complete hosts all C(n,2) edges
# must appear.
# ---------------------------------------------------------------------------


def instance_to_obj(coloring: EdgeColoring) -> dict:
    return {
        "n": coloring.host.n,
        "r": coloring.r,
        "edges": [
            {"u": e.u, "v": e.v, "c": c} for e, c in coloring.items()
        ],
    }


def instance_from_obj(obj: dict) -> EdgeColoring:
    try:
        n = int(obj["n"])
        r = int(obj["r"])
        raw = obj["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise PreconditionFailed(f"malformed instance object: {exc}") from exc
    seen: dict[Edge, int] = {}
    pairs = []
    for item in raw:
        try:
            u, v, c = int(item["u"]), int(item["v"]), int(item["c"])
        except (KeyError, TypeError, ValueError) as exc:
            raise PreconditionFailed(f"malformed edge record {item!r}") from exc
        if u == v:
            raise PreconditionFailed(f"self-loop {u}-{v} rejected")
        if not u < v:
            raise PreconditionFailed(f"edge {u}-{v} must be listed with u < v")
        if not (0 <= u and v < n):
            raise PreconditionFailed(f"edge {u}-{v} outside vertex range")
        e = Edge(u, v)
        if e in seen:
            raise PreconditionFailed(f"duplicate edge {u}-{v}")
        if not 1 <= c <= r:
            raise PreconditionFailed(f"color {c} outside palette 1..{r}")
        seen[e] = c
        pairs.append((u, v))
    host = SimpleGraph(n, pairs)
    return EdgeColoring(host, r, seen)


def instance_to_json(coloring: EdgeColoring) -> str:
    return json.dumps(instance_to_obj(coloring), sort_keys=True)


def instance_from_json(text: str) -> EdgeColoring:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PreconditionFailed(f"invalid JSON: {exc}") from exc
    return instance_from_obj(obj)
