"""Hamilton cycles without unique colors in r-colored complete graphs, r <= n/4.

Pipeline: (1) a maximal family of disjoint monochromatic claws in distinct
colors, with dangerous leaves exchanged away; (2) per-color cherry or
2-matching harvests inside the remaining vertex set, claw splitting, and
virtual twins for the singletons; (3) path merging across free or paired
unused endpoint edges; (4) path merging through cherries centered in the
remaining set; (5) closing through a contracted auxiliary graph.  Colors
move from ``unused`` to ``free`` only when two occurrences are locked into
preserved structures, so the final census can never hit exactly one.

A vertex is dangerous while it centers a claw in an unused color with all
leaves inside the remaining set; the pipeline never leaves a dangerous
path endpoint behind, which bounds the unused-colored edges at every
attachment point.

Deviation from the bare exchange argument: a greedy-maximal claw family
can genuinely meet the "second disjoint unused claw" configuration that a
maximum family rules out.  When that happens the family is enlarged by the
offending claw and the stage restarts, realizing the exchange argument
constructively instead of failing.

Virtual twins proxy their real vertex's colors toward every merge
candidate (not only the remaining set): a merge through the twin
contracts, after expansion, to the same real edge with the same color, and
without the proxy the endpoint-pair bound on surviving paths fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .colored_graph import (
    CycleOrPath,
    EdgeColoring,
    ParityCensus,
    SimpleGraph,
    cycle_census,
)
from .errors import InternalContradiction, NotFoundError, PreconditionFailed
from .hamilton import assert_valid_cycle, dirac_hamilton_cycle, hamilton_path_between


@dataclass(frozen=True)
class Claw:
    center: int
    leaves: tuple[int, int, int]
    color: int

    def vertices(self) -> set[int]:
        return {self.center, *self.leaves}


@dataclass
class ColorLedger:
    """Unused/free color sets plus the ordered transition log."""

    palette: int
    unused: set[int]
    free: set[int] = field(default_factory=set)
    history: list[dict] = field(default_factory=list)

    @classmethod
    def fresh(cls, palette: int) -> "ColorLedger":
        return cls(palette, set(range(1, palette + 1)))

    def free_color(self, color: int, reason: str, **info) -> None:
        if color not in self.unused:
            raise InternalContradiction(f"color {color} freed twice")
        self.unused.discard(color)
        self.free.add(color)
        self.history.append(
            {"event": "free-color", "color": color, "reason": reason, **info}
        )

    def note(self, event: str, **info) -> None:
        self.history.append({"event": event, **info})

    def reset_epoch(self, seed_colors: set[int], note: str) -> None:
        self.unused = set(range(1, self.palette + 1)) - seed_colors
        self.free = set(seed_colors)
        self.history.append({"event": "restart", "note": note})


@dataclass
class PreservedCollection:
    """Mutable pipeline state: claws, preserved paths, remaining vertices.

    ``paths`` hold vertex lists (2 or more vertices each once the claws are
    split); ``cherry_centers`` are the remaining-set vertices consumed as
    merge cherries; virtual twins map through ``virtual_real`` and their
    stub edges carry ``gadget_colors``.
    """

    n: int
    claws: list[Claw] = field(default_factory=list)
    paths: list[list[int]] = field(default_factory=list)
    remaining: set[int] = field(default_factory=set)
    cherry_centers: set[int] = field(default_factory=set)
    virtual_real: dict[int, int] = field(default_factory=dict)
    gadget_colors: dict[int, int] = field(default_factory=dict)

    def color_fn(self, chi: EdgeColoring):
        vr, gc = self.virtual_real, self.gadget_colors

        def col(x: int, y: int) -> int:
            if vr.get(x) == y:
                return gc[x]
            if vr.get(y) == x:
                return gc[y]
            return chi.color(vr.get(x, x), vr.get(y, y))

        return col


@dataclass(frozen=True)
class VirtualVertexMap:
    pairs: tuple[tuple[int, int], ...]  # (real singleton, virtual twin)


@dataclass(frozen=True)
class UniqueFreeResult:
    cycle: CycleOrPath
    census: ParityCensus
    ledger: ColorLedger
    virtual_map: VirtualVertexMap


# ---------------------------------------------------------------------------
# Step 1: claw collection and dangerous-leaf resolution
# ---------------------------------------------------------------------------


def _dangerous_witness(
    chi: EdgeColoring, v: int, remaining: set[int], unused: set[int]
) -> Claw | None:
    """First claw (min color, lexicographic leaves) showing v is dangerous."""
    pool = sorted(remaining - {v})
    for c in sorted(unused):
        leaves = [z for z in pool if chi.color(v, z) == c]
        if len(leaves) >= 3:
            return Claw(v, tuple(leaves[:3]), c)
    return None


def _greedy_claws(
    chi: EdgeColoring, seed: list[Claw], ledger: ColorLedger
) -> PreservedCollection:
    """Extend ``seed`` to a maximal claw family: centers in increasing id,
    colors in increasing id, leaves lexicographic."""
    n = chi.host.n
    used: set[int] = set()
    for claw in seed:
        used |= claw.vertices()
    claws = list(seed)
    for x0 in range(n):
        if x0 in used:
            continue
        for c in sorted(ledger.unused):
            leaves = [
                v
                for v in range(n)
                if v != x0 and v not in used and chi.color(x0, v) == c
            ][:3]
            if len(leaves) == 3:
                claw = Claw(x0, tuple(leaves), c)
                claws.append(claw)
                used |= claw.vertices()
                ledger.free_color(c, "claw", center=x0, leaves=leaves)
                break
    coll = PreservedCollection(
        n=n, claws=claws, remaining=set(range(n)) - used
    )
    bad = next(
        (
            v
            for v in sorted(coll.remaining)
            if _dangerous_witness(chi, v, coll.remaining, ledger.unused)
        ),
        None,
    )
    if bad is not None:
        raise InternalContradiction(
            f"greedy certificate failed: vertex {bad} is dangerous inside R"
        )
    return coll


def max_claw_collection(
    chi: EdgeColoring, ledger: ColorLedger | None = None
) -> PreservedCollection:
    """Maximal family of disjoint monochromatic claws in distinct colors.

    Maximality certificate: no vertex of the remaining set centers a claw
    in a still-unused color with leaves in the remaining set.
    """
    if not chi.host.is_complete():
        raise PreconditionFailed("the pipeline works on colored complete graphs")
    if ledger is None:
        ledger = ColorLedger.fresh(chi.r)
    return _greedy_claws(chi, [], ledger)


def resolve_dangerous(
    chi: EdgeColoring, coll: PreservedCollection, ledger: ColorLedger
) -> PreservedCollection:
    """Exchange away dangerous claw leaves.

    A dangerous leaf's witness claw replaces its host claw; the two other
    leaves and the center retire as a monochromatic cherry.  If one of
    those two is itself still dangerous, the two witness claws certify that
    the family was not maximum: it is enlarged and the stage restarts.
    """
    while True:
        seed = _exchange_pass(chi, coll, ledger)
        if seed is None:
            break
        ledger.reset_epoch(
            {cl.color for cl in seed},
            f"maximality exchange enlarged the claw family to {len(seed)}",
        )
        coll = _greedy_claws(chi, seed, ledger)
    _assert_no_dangerous(chi, coll, ledger)
    _assert_disjoint(coll)
    return coll


def _exchange_pass(
    chi: EdgeColoring, coll: PreservedCollection, ledger: ColorLedger
) -> list[Claw] | None:
    """One sweep over the claws; returns an enlarged seed on the bad case."""
    i = 0
    while i < len(coll.claws):
        claw = coll.claws[i]
        witness = None
        for leaf in claw.leaves:
            witness = _dangerous_witness(chi, leaf, coll.remaining, ledger.unused)
            if witness is not None:
                break
        if witness is None:
            i += 1
            continue
        others = [x for x in claw.leaves if x != witness.center]
        coll.claws[i] = witness
        coll.remaining -= set(witness.leaves)
        ledger.free_color(
            witness.color,
            "dangerous-exchange",
            old_center=claw.center,
            new_center=witness.center,
        )
        for x in others:
            second = _dangerous_witness(chi, x, coll.remaining, ledger.unused)
            if second is not None:
                # Two disjoint unused-color claws off one claw's leaves:
                # the family was not maximum.  Enlarge and restart.
                return coll.claws + [second]
        coll.paths.append([others[0], claw.center, others[1]])
        ledger.note(
            "retired-cherry", color=claw.color,
            cherry=[others[0], claw.center, others[1]],
        )
        i += 1
    return None


def _assert_disjoint(coll: PreservedCollection) -> None:
    """Claws, paths and the remaining set never share a vertex."""
    seen: set[int] = set()
    for claw in coll.claws:
        vs = claw.vertices()
        if seen & vs:
            raise InternalContradiction("claws overlap")
        seen |= vs
    for p in coll.paths:
        vs = set(p)
        if seen & vs or len(vs) != len(p):
            raise InternalContradiction("paths overlap preserved structures")
        seen |= vs
    overlap = seen & coll.remaining
    # cherry centers live in R by design; nothing else may.
    if overlap - coll.cherry_centers:
        raise InternalContradiction("preserved structures intersect R")


def _assert_no_dangerous(
    chi: EdgeColoring, coll: PreservedCollection, ledger: ColorLedger
) -> None:
    exposed = [leaf for claw in coll.claws for leaf in claw.leaves]
    exposed += [p[0] for p in coll.paths] + [p[-1] for p in coll.paths]
    exposed += sorted(coll.remaining)
    for v in exposed:
        if _dangerous_witness(chi, v, coll.remaining, ledger.unused) is not None:
            raise InternalContradiction(f"vertex {v} left dangerous")


# ---------------------------------------------------------------------------
# Step 2: harvests, claw splitting, virtual twins
# ---------------------------------------------------------------------------


def harvest_cherries_matchings(
    chi: EdgeColoring, coll: PreservedCollection, ledger: ColorLedger
) -> PreservedCollection:
    """Preserve a cherry (preferred) or a 2-matching per unused color, then
    split each claw into a singleton plus a cherry and attach virtual twins
    to the singletons."""
    rem = coll.remaining
    # A color with no occurrence at all can never reach count one; treating
    # it as unused would only poison the counting (relevant for oversized
    # best-effort palettes).
    present = {c for _, c in chi.items()}
    for c in sorted(ledger.unused - present):
        ledger.free_color(c, "absent")
    for c in sorted(ledger.unused):
        cherry = None
        for z2 in sorted(rem):
            nb = [z for z in sorted(rem) if z != z2 and chi.color(z2, z) == c]
            if len(nb) >= 2:
                cherry = [nb[0], z2, nb[1]]
                break
        if cherry is not None:
            coll.paths.append(cherry)
            rem -= set(cherry)
            ledger.free_color(c, "cherry", cherry=cherry)
            continue
        c_edges = [
            (u, v)
            for u in sorted(rem)
            for v in sorted(rem)
            if u < v and chi.color(u, v) == c
        ]
        matching = next(
            (
                (e1, e2)
                for i, e1 in enumerate(c_edges)
                for e2 in c_edges[i + 1 :]
                if not set(e1) & set(e2)
            ),
            None,
        )
        if matching is not None:
            for u, v in matching:
                coll.paths.append([u, v])
                rem -= {u, v}
            ledger.free_color(c, "2-matching", edges=[list(e) for e in matching])
    for c in sorted(ledger.unused):
        inside = sum(
            1 for u in rem for v in rem if u < v and chi.color(u, v) == c
        )
        if inside > 1:
            raise InternalContradiction(
                f"unused color {c} still spans {inside} edges inside R"
            )
    if len(rem) < 4 * len(ledger.unused):
        raise InternalContradiction("remaining set shrank below four per unused color")
    # Split claws: smallest leaf becomes a singleton (virtual twin attached),
    # the center and the other two leaves a cherry in the claw's color.
    free_pool = sorted(ledger.free)
    if coll.claws and not free_pool:
        raise InternalContradiction("claws exist but no color is free")
    virtuals = []
    for j, claw in enumerate(coll.claws):
        leaves = sorted(claw.leaves)
        twin = coll.n + j
        coll.virtual_real[twin] = leaves[0]
        coll.gadget_colors[twin] = free_pool[0]
        coll.paths.append([leaves[0], twin])
        coll.paths.append([leaves[1], claw.center, leaves[2]])
        virtuals.append((leaves[0], twin))
        ledger.note(
            "claw-split", color=claw.color, singleton=leaves[0], twin=twin,
            gadget_color=free_pool[0],
        )
    coll.claws = []
    if any(len(p) < 2 for p in coll.paths):
        raise InternalContradiction("every preserved path needs two endpoints")
    _assert_disjoint(coll)
    return coll


# ---------------------------------------------------------------------------
# Step 3: merging across endpoint edges
# ---------------------------------------------------------------------------


def _endpoint_index(coll: PreservedCollection) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, p in enumerate(coll.paths):
        out[p[0]] = i
        out[p[-1]] = i
    return out


def _merge_at(coll: PreservedCollection, w1: int, w2: int) -> None:
    idx = _endpoint_index(coll)
    i, j = idx[w1], idx[w2]
    if i == j:
        raise InternalContradiction("merge would close a cycle")
    pi, pj = coll.paths[i], coll.paths[j]
    if pi[-1] != w1:
        pi.reverse()
    if pj[0] != w2:
        pj.reverse()
    coll.paths[i] = pi + pj
    del coll.paths[j]


def merge_endpoints(
    chi: EdgeColoring, coll: PreservedCollection, ledger: ColorLedger
) -> PreservedCollection:
    """Fixpoint of the two endpoint-merging rules.

    (i) merge two paths across a free-colored endpoint edge; (ii) two
    same-colored unused endpoint edges on four distinct endpoints merge
    twice at once (across four paths, or chained through a middle path)
    and free their color.
    """
    col = coll.color_fn(chi)

    def cross_pairs() -> list[tuple[int, int]]:
        idx = _endpoint_index(coll)
        eps = sorted(idx)
        return [
            (w1, w2)
            for a, w1 in enumerate(eps)
            for w2 in eps[a + 1 :]
            if idx[w1] != idx[w2]
        ]

    def rule_i() -> bool:
        for w1, w2 in cross_pairs():
            if col(w1, w2) in ledger.free:
                _merge_at(coll, w1, w2)
                ledger.note("endpoint-merge", at=[w1, w2], color=col(w1, w2))
                return True
        return False

    def rule_ii() -> bool:
        pairs = cross_pairs()
        idx = _endpoint_index(coll)
        for a, e1 in enumerate(pairs):
            c = col(*e1)
            if c not in ledger.unused:
                continue
            for e2 in pairs[a + 1 :]:
                if col(*e2) != c or set(e1) & set(e2):
                    continue
                spanned = {idx[w] for w in e1} | {idx[w] for w in e2}
                if len(spanned) < 3:
                    continue  # both edges join the same two paths: a cycle
                _merge_at(coll, *e1)
                _merge_at(coll, *e2)
                ledger.free_color(
                    c, "endpoint-pair", edges=[list(e1), list(e2)]
                )
                return True
        return False

    progressed = True
    while progressed:
        while rule_i():
            pass
        progressed = rule_ii()

    counts: dict[int, int] = {}
    for p in coll.paths:
        for x, y in zip(p, p[1:]):
            counts[col(x, y)] = counts.get(col(x, y), 0) + 1
    if 1 in counts.values():
        raise InternalContradiction("a color occurs exactly once in the paths")
    if 2 * len(coll.paths) > len(ledger.unused) + 3:
        raise InternalContradiction(
            f"{len(coll.paths)} paths survive {len(ledger.unused)} unused colors"
        )
    _assert_disjoint(coll)
    return coll


# ---------------------------------------------------------------------------
# Step 4: merging through cherries centered in R
# ---------------------------------------------------------------------------


def merge_cherries(
    chi: EdgeColoring, coll: PreservedCollection, ledger: ColorLedger
) -> PreservedCollection:
    """Merge down to two paths through free cherries centered in R."""
    col = coll.color_fn(chi)
    start_paths = len(coll.paths)
    while len(coll.paths) > 2:
        found = None
        for i, j in combinations(range(len(coll.paths)), 2):
            for w1 in (coll.paths[i][0], coll.paths[i][-1]):
                for w2 in (coll.paths[j][0], coll.paths[j][-1]):
                    for v in sorted(coll.remaining - coll.cherry_centers):
                        if (
                            col(w1, v) in ledger.free
                            and col(w2, v) in ledger.free
                        ):
                            found = (w1, w2, v)
                            break
                    if found:
                        break
                if found:
                    break
            if found:
                break
        if not found:
            raise InternalContradiction(
                "no common free cherry center; the counting bound failed"
            )
        w1, w2, v = found
        idx = _endpoint_index(coll)
        i = idx[w1]
        pi = coll.paths[i]
        if pi[-1] != w1:
            pi.reverse()
        pi.append(v)
        coll.paths[i] = pi
        _merge_at_vertex_tail(coll, i, w2)
        coll.cherry_centers.add(v)
        ledger.note("cherry-merge", center=v, joins=[w1, w2])
    if len(coll.cherry_centers) != start_paths - len(coll.paths):
        raise InternalContradiction("cherry-center count drifted")
    _assert_disjoint(coll)
    return coll


def _merge_at_vertex_tail(coll: PreservedCollection, i: int, w2: int) -> None:
    idx = _endpoint_index(coll)
    j = idx[w2]
    if j == i:
        raise InternalContradiction("cherry merge would close a cycle")
    pj = coll.paths[j]
    if pj[0] != w2:
        pj.reverse()
    coll.paths[i] = coll.paths[i] + pj
    del coll.paths[j]


# ---------------------------------------------------------------------------
# Step 5 and the special closings
# ---------------------------------------------------------------------------


def _iter_attachments(col, ws: list[int], pool: list[int], allowed):
    """Assignments of distinct pool vertices to the endpoints in ``ws`` with
    every attachment color allowed, in lexicographic order."""

    taken: list[int] = []

    def rec(k: int):
        if k == len(ws):
            yield list(taken)
            return
        for z in pool:
            if z in taken or not allowed(col(ws[k], z)):
                continue
            taken.append(z)
            yield from rec(k + 1)
            taken.pop()

    yield from rec(0)


def _free_subgraph_path(
    chi: EdgeColoring,
    vertices: list[int],
    x: int,
    y: int,
    banned_colors: set[int],
) -> list[int] | None:
    """Hamilton {x,y}-path of the induced subgraph avoiding banned colors."""
    order = sorted(vertices)
    pos = {v: i for i, v in enumerate(order)}
    es = [
        (pos[u], pos[v])
        for u in order
        for v in order
        if u < v and chi.color(u, v) not in banned_colors
    ]
    sub = SimpleGraph(len(order), es)
    try:
        path = hamilton_path_between(sub, pos[x], pos[y])
    except NotFoundError:
        return None
    return [order[i] for i in path.vertices]


def close_cycle(
    chi: EdgeColoring, coll: PreservedCollection, ledger: ColorLedger
) -> list[int]:
    """Close one or two surviving paths through the remaining free graph.

    With two paths, contracted stand-ins for the attachment pairs reduce
    the job to one Hamilton cycle found under Dirac's condition; expanding
    them back yields the two disjoint spanning arcs.
    """
    col = coll.color_fn(chi)
    pool = sorted(coll.remaining - coll.cherry_centers)
    free = lambda c: c in ledger.free  # noqa: E731

    if len(coll.paths) == 1:
        p = coll.paths[0]
        for z_tail, z_head in _iter_attachments(col, [p[-1], p[0]], pool, free):
            arc = _free_subgraph_path(chi, pool, z_tail, z_head, ledger.unused)
            if arc is not None:
                ledger.note("close", mode="single-path",
                            attachments=[z_tail, z_head])
                return p + arc
        raise InternalContradiction("single path admits no free closing arc")

    if len(coll.paths) != 2:
        raise InternalContradiction("closing expects one or two paths")
    f1, f2 = coll.paths
    w1, w1p = f1[0], f1[-1]
    w2, w2p = f2[0], f2[-1]
    for zs in _iter_attachments(col, [w1, w1p, w2, w2p], pool, free):
        z1, z1p, z2, z2p = zs
        core = [v for v in pool if v not in zs]
        k = len(core)
        if k < 2:
            continue
        star1, star2 = k, k + 1
        edges = [
            (i, j)
            for i in range(k)
            for j in range(i + 1, k)
            if chi.color(core[i], core[j]) in ledger.free
        ]
        for i, v in enumerate(core):
            if chi.color(z1, v) in ledger.free and chi.color(z1p, v) in ledger.free:
                edges.append((i, star1))
            if chi.color(z2, v) in ledger.free and chi.color(z2p, v) in ledger.free:
                edges.append((i, star2))
        aux = SimpleGraph(k + 2, edges)
        try:
            cyc = dirac_hamilton_cycle(aux)
        except NotFoundError:
            continue
        rot = list(cyc.vertices)
        i1 = rot.index(star1)
        rot = rot[i1:] + rot[:i1]
        i2 = rot.index(star2)
        arc_a = [core[i] for i in rot[1:i2]]
        arc_b = [core[i] for i in rot[i2 + 1 :]]
        if not arc_a or not arc_b:
            continue
        if f1[-1] != w1p:
            f1.reverse()
        if f2[0] != w2p:
            f2.reverse()
        ledger.note("close", mode="two-paths", attachments=zs)
        return (
            [z1] + f1 + [z1p] + arc_b[::-1] + [z2p] + f2 + [z2] + arc_a[::-1]
        )
    raise InternalContradiction("no attachment quadruple closes the two paths")


def _arc_through_edge(
    pool: list[int], z_tail: int, z_head: int, hot: tuple[int, int]
) -> list[int] | None:
    """Spanning {z_tail,z_head}-path of the complete pool traversing ``hot``.

    Only the hot edge can carry the unused color here, so every other
    consecutive pair is unconstrained.
    """
    a, b = hot
    ends = {z_tail, z_head}
    if ends >= {a, b}:
        return None
    rest = [v for v in pool if v not in ends | {a, b}]
    if z_tail == a:
        return [a, b] + rest + [z_head]
    if z_tail == b:
        return [b, a] + rest + [z_head]
    if z_head == a:
        return [z_tail] + rest + [b, a]
    if z_head == b:
        return [z_tail] + rest + [a, b]
    return [z_tail, a, b] + rest + [z_head]


def _close_one_path_one_unused(
    chi: EdgeColoring, coll: PreservedCollection, ledger: ColorLedger, c: int
) -> list[int]:
    """One surviving path, one unused color c: close so that c's final
    count is anything but one.

    Off-color attachments plus an off-color spanning arc is the main line;
    at the tight boundary that arc can be missing, and the closing instead
    routes c exactly twice through hot attachments or the single c-edge
    left in the pool.
    """
    col = coll.color_fn(chi)
    pool = sorted(coll.remaining)
    p = coll.paths[0]
    f_c = sum(1 for x, y in zip(p, p[1:]) if col(x, y) == c)
    c_edges = [
        (u, v)
        for u in pool
        for v in pool
        if u < v and chi.color(u, v) == c
    ]
    for z_tail in pool:
        for z_head in pool:
            if z_head == z_tail:
                continue
            att = (col(p[-1], z_tail) == c) + (col(p[0], z_head) == c)
            if f_c + att != 1:
                arc = _free_subgraph_path(chi, pool, z_tail, z_head, {c})
                if arc is not None:
                    ledger.note("close", mode="single-unused-one-path",
                                attachments=[z_tail, z_head], hot_count=att)
                    return p + arc
            if c_edges and f_c + att + 1 != 1:
                arc = _arc_through_edge(pool, z_tail, z_head, c_edges[0])
                if arc is not None:
                    ledger.note("close", mode="single-unused-one-path-hot-arc",
                                attachments=[z_tail, z_head], hot_count=att + 1)
                    return p + arc
    raise InternalContradiction("one-path closing exhausted every assignment")


def special_case_single_unused(
    chi: EdgeColoring, coll: PreservedCollection, ledger: ColorLedger
) -> list[int]:
    """Closing with exactly one unused color c.

    One path: attach both ends into the remaining set off-color and span
    the rest avoiding c.  Two paths: either all endpoint attachments are
    off-color, and two disjoint spanning arcs close the cycle; or some
    endpoint sees c in the remaining set, and routing through that edge
    plus the (necessarily c-colored) cross-endpoint link uses c twice,
    after which any completion works.
    """
    (c,) = ledger.unused
    col = coll.color_fn(chi)
    pool = sorted(coll.remaining)
    not_c = lambda color: color != c  # noqa: E731

    if len(coll.paths) == 1:
        return _close_one_path_one_unused(chi, coll, ledger, c)

    if len(coll.paths) != 2:
        raise InternalContradiction("the single-unused case caps the paths at two")
    f1, f2 = coll.paths
    ends = [(0, f1[0]), (0, f1[-1]), (1, f2[0]), (1, f2[-1])]
    hot = next(
        (
            (which, w, z)
            for which, w in ends
            for z in pool
            if col(w, z) == c
        ),
        None,
    )
    if hot is not None:
        which, w, z = hot
        if which == 1:
            f1, f2 = f2, f1
        if f1[0] != w:
            f1.reverse()
        if col(f1[-1], f2[0]) != c:
            f2.reverse()
        if col(f1[-1], f2[0]) != c:
            raise InternalContradiction(
                "cross endpoint edges must carry the unused color"
            )
        rest = [v for v in pool if v != z]
        ledger.note("close", mode="single-unused-hot-edge", through=[z, w])
        return [z] + f1 + f2 + rest

    # All endpoint attachments into the pool are off-color: pick four
    # attachment vertices and split the pool into two spanning arcs by a
    # stand-in vertex wedged between the two far attachments.
    pos = {v: i for i, v in enumerate(pool)}
    stand_in = len(pool)
    base_edges = [
        (pos[u], pos[v])
        for u in pool
        for v in pool
        if u < v and chi.color(u, v) != c
    ]
    for quad in combinations(pool, 4):
        for z_near, z_far, z_m1, z_m2 in (
            (quad[0], quad[1], quad[2], quad[3]),
            (quad[0], quad[2], quad[1], quad[3]),
            (quad[0], quad[3], quad[1], quad[2]),
        ):
            es = base_edges + [(pos[z_m1], stand_in), (pos[z_m2], stand_in)]
            sub = SimpleGraph(len(pool) + 1, es)
            try:
                walk = hamilton_path_between(sub, pos[z_near], pos[z_far])
            except NotFoundError:
                continue
            seq = [pool[i] if i < stand_in else -1 for i in walk.vertices]
            cut = seq.index(-1)
            arc_a, arc_b = seq[:cut], seq[cut + 1 :]
            # arc_a runs z_near..{z_m1 or z_m2}; arc_b the other..z_far.
            f2seg = f2 if arc_a[-1] == z_m1 else list(reversed(f2))
            ledger.note(
                "close",
                mode="single-unused-two-arcs",
                attachments=[z_near, z_far, z_m1, z_m2],
            )
            return f1 + arc_a + f2seg + arc_b
    raise InternalContradiction("no two-arc cover avoids the unused color")


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------


def _trivial_close(coll: PreservedCollection) -> list[int]:
    """With no unused colors left, chain the paths and append the rest.

    Every color is free, i.e. carries two locked occurrences inside the
    preserved paths, so arbitrary connector edges cannot create a unique
    color.
    """
    seq: list[int] = []
    for p in coll.paths:
        seq.extend(p)
    seq.extend(sorted(coll.remaining - coll.cherry_centers))
    return seq


def _expand_virtuals(seq: list[int], coll: PreservedCollection) -> list[int]:
    """Contract every (z, twin, real) stretch to (z, real).

    The twin's stub edge vanishes and the proxy edge becomes the real edge
    of the same color, so the census over real colors is unchanged.
    """
    seq = list(seq)
    while True:
        i = next((k for k, v in enumerate(seq) if v in coll.virtual_real), None)
        if i is None:
            return seq
        real = coll.virtual_real[seq[i]]
        prev_v = seq[i - 1]
        next_v = seq[(i + 1) % len(seq)]
        if real not in (prev_v, next_v):
            raise InternalContradiction(
                "a virtual twin drifted away from its real vertex"
            )
        del seq[i]


def find_unique_free_hamilton(
    chi: EdgeColoring, best_effort: bool = False
) -> UniqueFreeResult:
    """Hamilton cycle of the colored complete graph with no unique color.

    Guaranteed whenever the palette size is at most n/4; ``best_effort``
    runs the pipeline beyond that bound and reports whatever happens (the
    guarantee is then void and internal counting steps may fail).
    """
    host = chi.host
    n = host.n
    if not host.is_complete():
        raise PreconditionFailed("the pipeline needs a colored complete graph")
    if n < 4:
        raise PreconditionFailed("need n >= 4")
    if chi.r > n // 4 and not best_effort:
        raise PreconditionFailed(
            f"palette {chi.r} exceeds n/4 = {n // 4}; pass best_effort to try anyway"
        )
    ledger = ColorLedger.fresh(chi.r)
    coll = max_claw_collection(chi, ledger)
    coll = resolve_dangerous(chi, coll, ledger)
    coll = harvest_cherries_matchings(chi, coll, ledger)
    coll = merge_endpoints(chi, coll, ledger)
    if not coll.paths:
        raise InternalContradiction("no structures preserved; r <= n/4 forbids this")
    if not ledger.unused:
        seq = _trivial_close(coll)
    elif len(ledger.unused) == 1:
        seq = special_case_single_unused(chi, coll, ledger)
    else:
        coll = merge_cherries(chi, coll, ledger)
        seq = close_cycle(chi, coll, ledger)
    seq = _expand_virtuals(seq, coll)
    cycle = CycleOrPath(tuple(seq), closed=True)
    assert_valid_cycle(host, cycle)
    census = cycle_census(chi, cycle)
    if census.unique_colors:
        raise InternalContradiction(
            f"pipeline closed a cycle with unique colors {census.unique_colors}"
        )
    vmap = VirtualVertexMap(
        tuple(sorted((r, v) for v, r in coll.virtual_real.items()))
    )
    ledger.note("done", census={str(k): v for k, v in sorted(census.counts.items())})
    return UniqueFreeResult(cycle, census, ledger, vmap)
