"""Explicit colorings, seeded instance generators, and exact oracles.

The generators use SplitMix64 so that identical (n, r, seed) inputs give
bit-identical instances on every platform; the update is documented in
:func:`splitmix64_next` and fixtures are frozen in the test suite.

The exact oracle enumerates colorings canonically up to color-class
permutation (the first edge gets color 1 and each new color is introduced
in order), pruning a branch as soon as some fully-colored Hamilton cycle
violates the requested predicate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colored_graph import (
    CycleOrPath,
    Edge,
    EdgeColoring,
    SimpleGraph,
    cycle_census,
)
from .errors import CapExceeded, PreconditionFailed
from .hamilton import ENUMERATION_CAP, enumerate_hamilton_cycles

_MASK64 = (1 << 64) - 1


def splitmix64_next(state: int) -> tuple[int, int]:
    """One SplitMix64 step: new state and output word.

    state' = state + 0x9E3779B97F4A7C15 (mod 2^64); the output mixes
    state' by two xor-shift-multiply rounds (constants 0xBF58476D1CE4E5B9,
    0x94D049BB133111EB) and a final 31-bit xor-shift.
    """
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def unique_upper_coloring(n: int) -> EdgeColoring:
    """The (n/2+1)-coloring under which every Hamilton cycle has a unique color.

    Vertices 0..n/2 form the large block, the rest the small one.  Edges
    inside either block get color 1; a crossing edge takes the color
    indexed by its large-block endpoint (vertex i maps to color i+1).
    """
    if n < 4 or n % 2 == 1:
        raise PreconditionFailed("construction needs even n >= 4")
    host = SimpleGraph.complete(n)
    big = n // 2 + 1  # vertices 0..n//2
    assignment: dict[Edge, int] = {}
    for e in host.edges():
        in_big = (e.u < big, e.v < big)
        if in_big == (True, True) or in_big == (False, False):
            assignment[e] = 1
        else:
            assignment[e] = e.u + 1  # e.u < e.v, so e.u is the big-block end
    return EdgeColoring(host, big, assignment)


_PREDICATES = {
    "has-unique-color": lambda census: census.has_unique_color(),
    "odd-chromatic": lambda census: census.is_odd_chromatic(),
    "even-chromatic": lambda census: census.is_even_chromatic(),
}


def verify_every_cycle(
    chi: EdgeColoring, predicate: str, cap: int = ENUMERATION_CAP
) -> tuple[bool, CycleOrPath | None]:
    """Check the predicate on every Hamilton cycle of the host.

    Returns (True, None) or (False, first failing cycle in canonical
    enumeration order).
    """
    try:
        pred = _PREDICATES[predicate]
    except KeyError:
        raise PreconditionFailed(
            f"unknown predicate {predicate!r}; choose from {sorted(_PREDICATES)}"
        ) from None
    for cyc in enumerate_hamilton_cycles(chi.host, cap):
        if not pred(cycle_census(chi, cyc)):
            return False, cyc
    return True, None


@dataclass(frozen=True)
class OracleResult:
    """Outcome of the exact oracle: an upper-bound witness or exhaustion.

    ``exists`` answers "is there an r-coloring making every Hamilton cycle
    satisfy the predicate"; ``witness`` carries the certifying coloring,
    ``nodes`` the number of search-tree nodes expanded, and ``scheme`` the
    canonical-form reduction applied.
    """

    exists: bool
    witness: EdgeColoring | None
    nodes: int
    scheme: str = "color-class-canonical: first edge color 1, new colors in order"


def _oracle_cap_ok(n: int, r: int) -> bool:
    if r <= 1:
        return n <= 10
    if r == 2:
        return n <= 8
    if r == 3:
        return n <= 6
    return n <= 5


def exact_ramsey(n: int, mode: str, r: int) -> OracleResult:
    """Decide whether some r-coloring of K_n leaves every Hamilton cycle
    odd-chromatic (mode "odd") or with a unique color (mode "unique").

    Colorings are enumerated up to color-class permutation; a branch dies
    on the first fully-colored violating cycle.
    """
    if mode not in ("odd", "unique"):
        raise PreconditionFailed("mode must be 'odd' or 'unique'")
    if n < 3 or r < 1:
        raise PreconditionFailed("need n >= 3 and r >= 1")
    if not _oracle_cap_ok(n, r):
        raise CapExceeded(f"exact oracle capped below n={n}, r={r}")
    host = SimpleGraph.complete(n)
    edges = list(host.edges())
    index = {e: i for i, e in enumerate(edges)}
    cycles = [
        [index[e] for e in cyc.edges()]
        for cyc in enumerate_hamilton_cycles(host)
    ]
    # Cycles become checkable once their highest-indexed edge is colored.
    closing: list[list[list[int]]] = [[] for _ in edges]
    for cyc in cycles:
        closing[max(cyc)].append(cyc)
    ok = (
        (lambda counts: 1 in counts)
        if mode == "unique"
        else (lambda counts: any(c % 2 for c in counts))
    )
    assignment = [0] * len(edges)
    nodes = 0

    def assign(i: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if i == len(edges):
            return True
        for color in range(1, min(used + 1, r) + 1):
            assignment[i] = color
            good = True
            for cyc in closing[i]:
                counts = [0] * r
                for j in cyc:
                    counts[assignment[j] - 1] += 1
                if not ok(counts):
                    good = False
                    break
            if good and assign(i + 1, max(used, color)):
                return True
        assignment[i] = 0
        return False

    if assign(0, 0):
        witness = EdgeColoring(
            host, r, {e: assignment[i] for i, e in enumerate(index)}
        )
        return OracleResult(True, witness, nodes)
    return OracleResult(False, None, nodes)


def random_coloring(n: int, r: int, seed: int) -> EdgeColoring:
    """Uniform i.i.d. coloring of K_n, bit-reproducible from the seed.

    Edges are visited in lexicographic order; each takes color
    1 + (splitmix64 output mod r).
    """
    if r < 1:
        raise PreconditionFailed("palette size must be at least 1")
    host = SimpleGraph.complete(n)
    return random_edge_coloring(host, r, seed)


def random_edge_coloring(g: SimpleGraph, r: int, seed: int) -> EdgeColoring:
    """Seeded uniform coloring of an arbitrary host, edges in lex order."""
    if r < 1:
        raise PreconditionFailed("palette size must be at least 1")
    state = seed & _MASK64
    assignment: dict[Edge, int] = {}
    for e in g.edges():
        state, word = splitmix64_next(state)
        assignment[e] = 1 + word % r
    return EdgeColoring(g, r, assignment)


def random_min_degree_graph(n: int, dmin: int, seed: int) -> SimpleGraph:
    """Seeded graph with minimum degree at least ``dmin``.

    Starting from K_n, edges are visited in a seeded shuffle and removed
    whenever both endpoints stay above the degree floor, yielding a sparse
    graph at the floor.
    """
    if not 0 <= dmin <= n - 1:
        raise PreconditionFailed("degree floor out of range")
    es = [(u, v) for u in range(n) for v in range(u + 1, n)]
    state = seed & _MASK64
    for i in range(len(es) - 1, 0, -1):
        state, word = splitmix64_next(state)
        j = word % (i + 1)
        es[i], es[j] = es[j], es[i]
    deg = [n - 1] * n
    kept = []
    for u, v in es:
        state, word = splitmix64_next(state)
        if deg[u] > dmin and deg[v] > dmin and word % 4 != 0:
            deg[u] -= 1
            deg[v] -= 1
        else:
            kept.append((u, v))
    return SimpleGraph(n, kept)
