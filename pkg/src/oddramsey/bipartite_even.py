"""Even-chromatic complete bipartite subgraphs via parity hypergraphs.

The constructive route: a strongly-even-chromatic K_{s-3,t'} pins down a
vertex pool V_2; three extra vertices w_1,w_2,w_3 induce, for every
u in V_2, the odd-support set of the three colors u sees toward them.
These supports are hyperedges over the color palette, and a size-t even
cover (every color covered an even number of times) marks a t-set B that
makes {w_1,w_2,w_3} x B even-chromatic, hence the assembled K_{s,t} too.

A K_{s,t} is even-chromatic iff the odd-supports of its t-side XOR to
zero, so exhausting all s-tuples in the role of the w's decides existence
outright at small n; the top-level search only reports ``not_found`` with
that certificate and says ``unknown`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .colored_graph import (
    EdgeColoring,
    ParityCensus,
    edge,
    parity_census,
)
from .errors import CapExceeded, InternalContradiction, PreconditionFailed


@dataclass(frozen=True)
class Miss:
    """A search that ended without a bipartition.

    ``status`` is "not_found" only when the failing stage carries an
    exhaustion certificate for its claim; budget-limited searches report
    "unknown".  ``stage`` names the pipeline stage that stopped.
    """

    status: str
    stage: str


@dataclass(frozen=True)
class ParityHypergraph:
    """Hypergraph on the color palette; edges are labeled odd-supports."""

    palette: int
    edges: tuple[tuple[int, frozenset[int]], ...]


@dataclass(frozen=True)
class EvenCover:
    labels: tuple[int, ...]


@dataclass(frozen=True)
class StronglyEvenWitness:
    """K_{s',t'} in which every t'-side vertex sees an all-even census."""

    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


@dataclass(frozen=True)
class Bipartition:
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


def _bipartite_census(
    chi: EdgeColoring, side_a: tuple[int, ...], side_b: tuple[int, ...]
) -> ParityCensus:
    return parity_census(
        chi, (edge(a, b) for a in side_a for b in side_b)
    )


def even_neighborhoods(
    chi: EdgeColoring, u: int, s_prime: int
) -> Iterator[frozenset[int]]:
    """All vertex sets S of size s' whose star at u has an all-even census.

    Every such S splits into even-size blocks inside u's color classes, so
    choosing an even-size subset per class enumerates each S exactly once.
    Classes are visited in color order and subsets lexicographically.
    """
    if s_prime < 2 or s_prime % 2 == 1:
        raise PreconditionFailed("even neighborhoods need even s' >= 2")
    by_color: dict[int, list[int]] = {}
    for v in chi.host.neighbors(u):
        by_color.setdefault(chi.color(u, v), []).append(v)
    classes = [sorted(by_color[c]) for c in sorted(by_color)]

    def rec(i: int, need: int) -> Iterator[tuple[int, ...]]:
        if need == 0:
            yield ()
            return
        if i >= len(classes):
            return
        cls = classes[i]
        for k in range(0, min(len(cls), need) + 1, 2):
            for chosen in combinations(cls, k):
                for rest in rec(i + 1, need - k):
                    yield chosen + rest

    for picked in rec(0, s_prime):
        yield frozenset(picked)


def find_strongly_even(
    chi: EdgeColoring, s_prime: int, t_prime: int
) -> StronglyEvenWitness | Miss:
    """Search for a strongly-even-chromatic K_{s',t'} by double counting.

    Every even s'-neighborhood is indexed by its vertex set; a set owned by
    t' distinct vertices is a witness.  The index is exhaustive, so a miss
    certifies that no witness exists.
    """
    n = chi.host.n
    if t_prime < 1:
        raise PreconditionFailed("need t' >= 1")
    if s_prime == 0:
        # Empty left side: every vertex sees an empty, vacuously even star.
        if n < t_prime:
            return Miss("not_found", "strongly-even")
        return StronglyEvenWitness((), tuple(range(t_prime)))
    owners: dict[frozenset[int], list[int]] = {}
    for u in range(n):
        for s_set in even_neighborhoods(chi, u, s_prime):
            got = owners.setdefault(s_set, [])
            got.append(u)
            if len(got) == t_prime:
                return StronglyEvenWitness(tuple(sorted(s_set)), tuple(got))
    return Miss("not_found", "strongly-even")


def build_parity_hypergraph(
    chi: EdgeColoring, w1: int, w2: int, w3: int, v2: tuple[int, ...]
) -> ParityHypergraph:
    """Odd-support hyperedges of the 3-edge color multisets toward w1,w2,w3.

    All three colors distinct: the support is all three; exactly two equal:
    the remaining singleton; all equal: that singleton.
    """
    trio = (w1, w2, w3)
    if len(set(trio)) != 3 or set(trio) & set(v2):
        raise PreconditionFailed("w-triple must be distinct and disjoint from V2")
    edges = []
    for u in v2:
        colors = [chi.color(u, w) for w in trio]
        support = frozenset(c for c in set(colors) if colors.count(c) % 2)
        if len(support) not in (1, 3):
            raise InternalContradiction("odd support of a triple has size 1 or 3")
        edges.append((u, support))
    return ParityHypergraph(chi.r, tuple(edges))


def _masks(h: ParityHypergraph) -> list[int]:
    return [
        sum(1 << (c - 1) for c in sup) for _, sup in h.edges
    ]


_EXHAUSTIVE_CAP = 200_000
_DECISIVE_CAP = 10_000_000


def find_even_cover(
    h: ParityHypergraph, k: int
) -> EvenCover | Miss:
    """A set of exactly k distinct hyperedges covering every color evenly.

    Tier 1 pairs up duplicate supports (k even); tier 2 runs a
    meet-in-the-middle scan over the GF(2) incidence rows filtered to
    weight k; tier 3 is plain lexicographic exhaustion on small instances.
    ``not_found`` is only reported when a complete tier ran; beyond budget
    the result is ``unknown``.
    """
    if k < 2:
        raise PreconditionFailed("even covers of interest have size >= 2")
    m = len(h.edges)
    masks = _masks(h)
    if k <= m and k % 2 == 0:
        pairs: list[tuple[int, int]] = []
        grouped: dict[int, list[int]] = {}
        for i, msk in enumerate(masks):
            grouped.setdefault(msk, []).append(i)
        for msk in grouped.values():
            for j in range(0, len(msk) - 1, 2):
                pairs.append((msk[j], msk[j + 1]))
        if len(pairs) >= k // 2:
            idx = [i for pair in pairs[: k // 2] for i in pair]
            return _checked_cover(h, masks, sorted(idx))
    if k > m:
        return Miss("not_found", "even-cover")
    space = comb(m, k)
    if space <= _EXHAUSTIVE_CAP:
        for combo in combinations(range(m), k):
            acc = 0
            for i in combo:
                acc ^= masks[i]
            if acc == 0:
                return _checked_cover(h, masks, list(combo))
        return Miss("not_found", "even-cover")
    if space <= _DECISIVE_CAP:
        found = _meet_in_the_middle(masks, k)
        if found is None:
            return Miss("not_found", "even-cover")
        return _checked_cover(h, masks, found)
    return Miss("unknown", "even-cover")


def _meet_in_the_middle(masks: list[int], k: int) -> list[int] | None:
    m = len(masks)
    half = m // 2
    left, right = list(range(half)), list(range(half, m))
    for a in range(max(0, k - len(right)), min(k, len(left)) + 1):
        sigs: dict[int, tuple[int, ...]] = {}
        for combo in combinations(left, a):
            acc = 0
            for i in combo:
                acc ^= masks[i]
            sigs.setdefault(acc, combo)
        for combo in combinations(right, k - a):
            acc = 0
            for i in combo:
                acc ^= masks[i]
            match = sigs.get(acc)
            if match is not None:
                return sorted(match + combo)
    return None


def _checked_cover(
    h: ParityHypergraph, masks: list[int], idx: list[int]
) -> EvenCover:
    acc = 0
    counts = [0] * h.palette
    for i in idx:
        acc ^= masks[i]
        for c in h.edges[i][1]:
            counts[c - 1] += 1
    if acc != 0 or any(c % 2 for c in counts):
        raise InternalContradiction("search tier returned an uneven cover")
    return EvenCover(tuple(h.edges[i][0] for i in idx))


def find_even_chromatic_kst(
    chi: EdgeColoring,
    s: int,
    t: int,
    t_prime: int | None = None,
    retry_w: bool = False,
    sweep_budget: int = 200_000,
) -> Bipartition | Miss:
    """Search for an even-chromatic K_{s,t} in a colored complete graph.

    Odd s runs the constructive pipeline (strongly-even K_{s-3,t'} pool,
    w-triple supports, even cover); when that stalls, an exhaustive sweep
    over all s-tuples in the w-role decides existence outright if it fits
    ``sweep_budget``.  Even s goes through the strongly-even search
    directly, whose miss certifies only the absence of *strongly*-even
    copies.  Every returned bipartition is verified even-chromatic.
    """
    n = chi.host.n
    if not chi.host.is_complete():
        raise PreconditionFailed("the host graph must be complete")
    # The construction is side-symmetric, so s > t is accepted even though
    # the interesting regime has s <= t.
    if s < 2 or t < 1 or s + t > n:
        raise PreconditionFailed("need s >= 2, t >= 1 with s + t <= n")
    if s % 2 == 0:
        wit = find_strongly_even(chi, s, t)
        if isinstance(wit, Miss):
            return wit
        out = Bipartition(wit.side_a, wit.side_b)
        _assert_even(chi, out)
        return out
    res = _odd_pipeline(chi, s, t, t_prime, retry_w)
    if isinstance(res, Bipartition):
        return res
    if comb(n, s) * comb(n - s, t) <= sweep_budget:
        sweep = _sweep_all_tuples(chi, s, t)
        if isinstance(sweep, Bipartition) or sweep.status == "not_found":
            return sweep
    return Miss("unknown", res.stage)


def _odd_pipeline(
    chi: EdgeColoring, s: int, t: int, t_prime: int | None, retry_w: bool
) -> Bipartition | Miss:
    n = chi.host.n
    tp = t_prime if t_prime is not None else n - s
    if tp < t:
        raise PreconditionFailed("t' below t leaves the cover search empty")
    wit = find_strongly_even(chi, s - 3, tp)
    if isinstance(wit, Miss):
        return Miss("unknown", "strongly-even")
    pool = set(wit.side_a) | set(wit.side_b)
    outside = [v for v in range(n) if v not in pool]
    if len(outside) < 3:
        raise PreconditionFailed(
            "no room for the w-triple next to the strongly-even copy"
        )
    triples = combinations(outside, 3) if retry_w else [tuple(outside[:3])]
    last = Miss("unknown", "even-cover")
    for trio in triples:
        hyper = build_parity_hypergraph(chi, *trio, wit.side_b)
        cover = find_even_cover(hyper, t)
        if isinstance(cover, EvenCover):
            out = Bipartition(
                tuple(sorted(wit.side_a + trio)), tuple(sorted(cover.labels))
            )
            _assert_even(chi, out)
            return out
        last = cover
    return last


def _sweep_all_tuples(
    chi: EdgeColoring, s: int, t: int
) -> Bipartition | Miss:
    """Decide existence by trying every s-tuple in the w-role.

    A bipartition (A, B) is even-chromatic iff the odd-supports of the
    B-vertices toward A XOR to zero, so exhausting A decides the question.
    """
    n = chi.host.n
    decisive = True
    for a_side in combinations(range(n), s):
        rest = [v for v in range(n) if v not in a_side]
        masks = []
        for u in rest:
            acc = 0
            for w in a_side:
                acc ^= 1 << (chi.color(u, w) - 1)
            masks.append(acc)
        space = comb(len(rest), t)
        if space > _DECISIVE_CAP:
            decisive = False
            continue
        found = None
        if space <= _EXHAUSTIVE_CAP:
            for combo in combinations(range(len(rest)), t):
                acc = 0
                for i in combo:
                    acc ^= masks[i]
                if acc == 0:
                    found = list(combo)
                    break
        else:
            found = _meet_in_the_middle(masks, t)
        if found is not None:
            out = Bipartition(
                tuple(a_side), tuple(sorted(rest[i] for i in found))
            )
            _assert_even(chi, out)
            return out
    if decisive:
        return Miss("not_found", "s-tuple-sweep")
    return Miss("unknown", "s-tuple-sweep")


def _assert_even(chi: EdgeColoring, b: Bipartition) -> None:
    if set(b.side_a) & set(b.side_b):
        raise InternalContradiction("bipartition sides overlap")
    if not _bipartite_census(chi, b.side_a, b.side_b).is_even_chromatic():
        raise InternalContradiction("pipeline produced an odd-chromatic K_{s,t}")


def brute_force_even_kst(
    chi: EdgeColoring, s: int, t: int, budget: int = 10_000_000
) -> Bipartition | Miss:
    """Oracle: exhaustive scan of all (A, B) splits by direct census."""
    n = chi.host.n
    if s < 1 or t < 1 or s + t > n:
        raise PreconditionFailed("need s, t >= 1 with s + t <= n")
    space = comb(n, s) * comb(n - s, t)
    if space > budget:
        raise CapExceeded(f"{space} censuses exceed the budget {budget}")
    for a_side in combinations(range(n), s):
        rest = [v for v in range(n) if v not in a_side]
        for b_side in combinations(rest, t):
            if _bipartite_census(chi, a_side, b_side).is_even_chromatic():
                return Bipartition(a_side, b_side)
    return Miss("not_found", "brute-force")
