"""Exact MWIS for (S124, triangle)-free graphs by repeated anti-neighbourhood splitting.

Every subproblem is a vertex mask in the original id space together with the
pivot it was opened under and an anchor, a neighbour of the pivot.  The
subproblem lies in the anti-neighbourhood of the pivot.  Inside a connected
piece the neighbours of the anchor form the near set (independent) and the
rest form the far set.  The case analysis below works on this split and
bottoms out in bipartite pieces solved by max-flow.

Each branching step is a plain cover argument (every independent set lands in
one of the branches), and every leaf is checked to be bipartite before it is
solved, so a returned value is always exact.  Structural properties that only
hold inside the graph class are checked as they are used; when one fails the solver
looks for a triangle or induced S124 in the input and raises ``ClassViolation``
with it, or ``ContextViolation`` if the input turns out to be in class.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Sequence

from .bipartite import mwis_bipartite
from .errors import ClassViolation, ContextViolation
from .graph import (
    Bipartition,
    OddCycle,
    VertexSet,
    WeightedGraph,
    bipartition,
    connected_components,
    is_independent,
    is_nontrivial,
    iter_members,
    members,
    popcount,
    set_weight,
)
from .recognition import check_class, find_induced_c5

# Case labels and their order; a subproblem handed down with limit r may only
# land in a case of rank <= r.
BIPARTITE = -1
C5_FREE = 0
CASE_RANK = {
    "bipartite": BIPARTITE,
    "c5-free": C5_FREE,
    "no-green": 1,
    "one-green": 2,
    "several-green": 3,
    "two-sided-green": 4,
    "shared-contact": 5,
    "lone-nail": 6,
    "odd-far-part": 7,
}
ANY = 7

HALF_SIDE1, HALF_SIDE2, PROPER_SIDE1, PROPER_SIDE2 = "half-join-side1", "half-join-side2", "proper-side1", "proper-side2"


@dataclass
class SolveStats:
    subproblems: int = 0
    max_depth: int = 0
    bipartite_leaves: int = 0
    branches: Counter = field(default_factory=Counter)


@dataclass
class SolveResult:
    weight: int
    solution: VertexSet
    leaves: list[VertexSet]
    stats: SolveStats = field(default_factory=SolveStats)
    leaves_complete: bool = True

    @property
    def vertices(self) -> list[int]:
        return members(self.solution)


@dataclass(frozen=True)
class ComponentContext:
    """A connected piece of the pivot's anti-neighbourhood, split by the anchor into near and far sets."""

    pivot: int
    anchor: int
    piece: VertexSet
    near: VertexSet
    far: VertexSet


@dataclass(frozen=True)
class GreenInfo:
    """A nontrivial far component with its sides and how each near vertex touches it."""

    component: VertexSet
    bip: Bipartition
    contacts: dict[int, str]

    @property
    def green(self) -> bool:
        return any(k in (PROPER_SIDE1, PROPER_SIDE2) for k in self.contacts.values())

    def proper(self, side: str | None = None) -> list[int]:
        kinds = (PROPER_SIDE1, PROPER_SIDE2) if side is None else (side,)
        return [h for h, k in self.contacts.items() if k in kinds]

    def half_joins(self) -> list[int]:
        return [h for h, k in self.contacts.items() if k in (HALF_SIDE1, HALF_SIDE2)]

    def swapped(self) -> "GreenInfo":
        flip = {HALF_SIDE1: HALF_SIDE2, HALF_SIDE2: HALF_SIDE1, PROPER_SIDE1: PROPER_SIDE2, PROPER_SIDE2: PROPER_SIDE1}
        return GreenInfo(self.component, self.bip.swapped(), {h: flip[k] for h, k in self.contacts.items()})


class _Part:
    __slots__ = ("weight", "solution", "leaves")

    def __init__(self, weight: int, solution: VertexSet, leaves: list[VertexSet]):
        self.weight = weight
        self.solution = solution
        self.leaves = leaves


def elimination_sets(g: WeightedGraph, scope: VertexSet, seq: Sequence[int]) -> list[VertexSet]:
    """The ``len(seq) + 1`` vertex sets explored by ``eliminate_sequence``."""
    out = []
    removed = 0
    for h in seq:
        out.append(scope & ~removed & ~g.adj[h])
        removed |= 1 << h
    out.append(scope & ~removed)
    return out


def eliminate_sequence(g: WeightedGraph, scope: VertexSet, seq: Sequence[int], step_solver, tail_solver, combine=None):
    """Best of ``step_solver`` on each ``scope - {h_1..h_(i-1)} - N(h_i)`` and ``tail_solver`` on ``scope - seq``.

    An independent set of ``scope`` either avoids all of ``seq`` or contains a
    first element ``h_i`` of it, in which case it avoids ``h_1..h_(i-1)`` and
    ``N(h_i)``.  Ties keep the earliest branch.  ``combine`` merges the branch
    results (default: keep the heaviest).
    """
    sets = elimination_sets(g, scope, seq)
    results = [step_solver(s, h) for s, h in zip(sets, seq)]
    results.append(tail_solver(sets[-1]))
    return (combine or _first_max)(results)


def _first_max(results):
    best = results[0]
    for r in results[1:]:
        if r.weight > best.weight:
            best = r
    return best


def order_by_domination(items: Sequence[int], ge: Callable[[int, int], bool], key=None, on_failure=None) -> list[int]:
    """Order ``items`` so that each one dominates (``ge``) every later one.

    Repeatedly extracts an element dominating all remaining ones, choosing
    among several by ``key`` (default: smallest id).
    """
    remaining = sorted(items)
    order = []
    while remaining:
        maxima = [a for a in remaining if all(a == b or ge(a, b) for b in remaining)]
        if not maxima:
            if on_failure is not None:
                on_failure(remaining)
            raise ContextViolation("domination order", f"no maximum among {remaining}")
        pick = min(maxima, key=key) if key is not None else maxima[0]
        order.append(pick)
        remaining.remove(pick)
    return order


def doubly_contacts(g: WeightedGraph, h: int, triple: tuple[int, int, int]) -> bool:
    """``h`` sees ``x`` and exactly one of ``y, z`` for the P1+P2 ``(x; y z)``."""
    x, y, z = triple
    return g.has_edge(h, x) and (g.has_edge(h, y) != g.has_edge(h, z))


def doubly_contacted_triples(g: WeightedGraph, h: int, far: VertexSet) -> list[tuple[int, int, int]]:
    """Every P1+P2 ``(x; y z)`` of the far set that ``h`` doubly contacts, with ``h`` adjacent to ``y``."""
    adj = g.adj
    seen = adj[h] & far
    out = []
    for y in iter_members(seen):
        for z in iter_members(adj[y] & far & ~adj[h]):
            for x in iter_members(seen & ~adj[y] & ~adj[z] & ~(1 << y)):
                out.append((x, y, z))
    return out


def p4_blockers(g: WeightedGraph, target: GreenInfo, h_max: int, near: VertexSet) -> VertexSet:
    """Vertices ``y`` of ``side2 - N(h_max)`` ending an induced P4 ``h-a-y-b`` with ``a, b`` in ``side1 - N(h_max)``."""
    adj = g.adj
    side1, side2 = target.bip.side1, target.bip.side2
    free1 = side1 & ~adj[h_max]
    blockers = 0
    for y in iter_members(side2 & ~adj[h_max]):
        around = adj[y] & free1
        if popcount(around) < 2:
            continue
        for h in iter_members(near & ~(1 << h_max)):
            if adj[h] >> y & 1:
                continue
            if adj[h] & around and around & ~adj[h]:
                blockers |= 1 << y
                break
    return blockers


def nail_far_set(g: WeightedGraph, near: VertexSet, far: VertexSet, h: int) -> VertexSet:
    """Far vertices at distance two from ``h`` on a 5-cycle through ``h`` whose other vertices are far."""
    adj = g.adj
    touched = adj[h] & far
    rest = far & ~adj[h]
    found = 0
    for p in iter_members(rest):
        for q in iter_members(adj[p] & rest):
            if q < p:
                continue
            xs = touched & adj[p] & ~adj[q]
            ys = touched & adj[q] & ~adj[p]
            if not xs or not ys:
                continue
            if any(ys & ~adj[x] for x in iter_members(xs)):
                found |= (1 << p) | (1 << q)
    return found


def lone_nails(g: WeightedGraph, near: VertexSet, far: VertexSet) -> list[int]:
    """Near vertices that are the only near vertex of some induced 5-cycle in the piece."""
    return [h for h in iter_members(near) if nail_far_set(g, near, far, h)]


def green_info_for(g: WeightedGraph, near: VertexSet, far: VertexSet) -> tuple[list[GreenInfo], list[tuple[int, VertexSet]]]:
    """Contact classification of every nontrivial far component.

    Also returns ``(h, component)`` pairs where ``h`` touches both sides, which
    cannot happen while every 5-cycle of the piece has two near vertices.
    """
    adj = g.adj
    infos = []
    bad = []
    for comp in connected_components(g, far):
        if not is_nontrivial(g, comp):
            continue
        bip = bipartition(g, comp)
        if isinstance(bip, OddCycle):
            raise ContextViolation("green_info", "far component is not bipartite")
        contacts = {}
        for h in iter_members(near):
            nb = adj[h] & comp
            if not nb:
                continue
            in1, in2 = nb & bip.side1, nb & bip.side2
            if in1 and in2:
                bad.append((h, comp))
                continue
            if in1:
                contacts[h] = HALF_SIDE1 if in1 == bip.side1 else PROPER_SIDE1
            else:
                contacts[h] = HALF_SIDE2 if in2 == bip.side2 else PROPER_SIDE2
        infos.append(GreenInfo(comp, bip, contacts))
    return infos, bad


class Solver:
    """One solve of one graph; holds the instrumentation counters."""

    def __init__(
        self,
        g: WeightedGraph,
        *,
        strict: bool = True,
        record_leaves: bool = True,
        max_leaves: int = 200_000,
        depth_limit: int | None = None,
    ):
        self.g = g
        self.adj = g.adj
        self.w = g.weights
        self.strict = strict
        self.record_leaves = record_leaves
        self.max_leaves = max_leaves
        self.depth_limit = depth_limit if depth_limit is not None else 4 * max(g.n, 1)
        self.stats = SolveStats()
        self._witness_checked = False
        self._witness = None

    # ----------------------------------------------------------- errors

    def violation(self, check: str, detail: str = ""):
        if not self._witness_checked:
            self._witness = check_class(self.g)
            self._witness_checked = True
        if self._witness is not None:
            raise ClassViolation(check, self._witness)
        raise ContextViolation(check, detail)

    # ---------------------------------------------------------- combining

    def _leaf(self, weight: int, solution: VertexSet, leaf: VertexSet) -> _Part:
        return _Part(weight, solution, [leaf] if self.record_leaves else [])

    def _join(self, parts: list[_Part]) -> _Part:
        """Disjoint, mutually non-adjacent pieces: weights add, leaf families multiply."""
        weight = sum(p.weight for p in parts)
        solution = 0
        for p in parts:
            solution |= p.solution
        leaves: list[VertexSet] = []
        if self.record_leaves:
            size = 1
            for p in parts:
                size *= max(len(p.leaves), 1)
            if size > self.max_leaves:
                self.record_leaves = False
            else:
                families = [p.leaves or [0] for p in parts]
                for combo in product(*families):
                    m = 0
                    for x in combo:
                        m |= x
                    leaves.append(m)
        return _Part(weight, solution, leaves)

    def _best(self, parts: list[_Part]) -> _Part:
        best = _first_max(parts)
        leaves: list[VertexSet] = []
        if self.record_leaves:
            for p in parts:
                leaves.extend(p.leaves)
            if len(leaves) > self.max_leaves:
                self.record_leaves = False
                leaves = []
        return _Part(best.weight, best.solution, leaves)

    def _add_vertices(self, part: _Part, extra: VertexSet) -> _Part:
        """Add isolated vertices to a partial result (weights are non-negative)."""
        if not extra:
            return part
        positive = 0
        for x in iter_members(extra):
            if self.w[x] > 0:
                positive |= 1 << x
        leaves = [leaf | extra for leaf in part.leaves] if self.record_leaves else []
        return _Part(part.weight + set_weight(self.g, positive), part.solution | positive, leaves)

    def _enter(self, depth: int) -> None:
        self.stats.subproblems += 1
        if depth > self.stats.max_depth:
            self.stats.max_depth = depth
        if depth > self.depth_limit:
            raise ContextViolation("depth guard", f"recursion depth {depth} exceeds {self.depth_limit}")

    # ------------------------------------------------------------ leaves

    def solve_bipartite(self, scope: VertexSet, bip: Bipartition | None = None, label: str = "bipartite") -> _Part:
        if bip is None:
            bip = bipartition(self.g, scope)
            if isinstance(bip, OddCycle):
                self.violation(label, f"expected a bipartite piece, found odd cycle {bip.cycle}")
        self.stats.bipartite_leaves += 1
        sol = mwis_bipartite(self.g, scope, bip)
        return self._leaf(sol.weight, sol.solution, scope)

    def solve_nearly_bipartite(self, within: VertexSet, depth: int = 0) -> _Part:
        """Anti-neighbourhood recursion where every anti-neighbourhood is bipartite."""
        g, adj = self.g, self.adj
        parts = []
        isolated = 0
        for comp in connected_components(g, within):
            if comp & (comp - 1) == 0:
                isolated |= comp
                continue
            bip = bipartition(g, comp)
            if not isinstance(bip, OddCycle):
                parts.append(self.solve_bipartite(comp, bip))
                continue
            self.stats.branches["nearly-bipartite"] += 1
            options = []
            for v in iter_members(comp):
                anti = comp & ~adj[v] & ~(1 << v)
                abip = bipartition(g, anti)
                if isinstance(abip, OddCycle):
                    self.violation("nearly bipartite (C5-free piece)", f"anti-neighbourhood of {v} has odd cycle {abip.cycle}")
                self.stats.bipartite_leaves += 1
                sol = mwis_bipartite(g, anti, abip)
                options.append(self._add_vertices(self._leaf(sol.weight, sol.solution, anti), 1 << v))
            parts.append(self._best(options))
        return self._add_vertices(self._join(parts) if parts else _Part(0, 0, [0]), isolated)

    # ---------------------------------------------------------- dispatch

    def make_context(self, v: int, anchor: int | None, piece: VertexSet, scope_hint: VertexSet | None = None) -> ComponentContext:
        adj = self.adj
        if anchor is None:
            cands = adj[v] & (scope_hint if scope_hint is not None else self.g.all_vertices)
            anchor = next((x for x in iter_members(cands) if adj[x] & piece), None)
            if anchor is None:
                raise ContextViolation("make_context", f"no neighbour of {v} contacts the component")
        near = piece & adj[anchor]
        far = piece & ~adj[anchor]
        if not is_independent(self.g, near):
            self.violation("near set independent", f"neighbours of {anchor} inside the component are adjacent")
        return ComponentContext(v, anchor, piece, near, far)

    def subproblem(
        self,
        scope: VertexSet,
        v: int,
        anchor: int,
        depth: int,
        limit: int = ANY,
        prefer: str | None = None,
    ) -> _Part:
        """Solve ``G[scope]`` under a pivot and anchor, piece by piece."""
        self._enter(depth)
        g, adj = self.g, self.adj
        parts = []
        isolated = 0
        for comp in connected_components(g, scope):
            if comp & (comp - 1) == 0:
                isolated |= comp
                continue
            if prefer is None:
                bip = bipartition(g, comp)
                if not isinstance(bip, OddCycle):
                    parts.append(self.solve_bipartite(comp, bip))
                    continue
            if comp & adj[anchor]:
                ctx = self.make_context(v, anchor, comp)
                parts.append(self.solve_component(ctx, depth + 1, limit, prefer))
                continue
            bip = bipartition(g, comp)
            if not isinstance(bip, OddCycle):
                parts.append(self.solve_bipartite(comp, bip))
                continue
            # a piece out of reach of the anchor: reopen it with the anchor as pivot
            next_anchor = next((x for x in iter_members(adj[anchor]) if adj[x] & comp), None)
            if next_anchor is None:
                parts.append(self.solve_connected(comp, depth + 1))
            else:
                self.stats.branches["recontext"] += 1
                parts.append(self.solve_component(self.make_context(anchor, next_anchor, comp), depth + 1, limit))
        if not parts:
            return self._add_vertices(_Part(0, 0, [0]), isolated)
        return self._add_vertices(self._join(parts), isolated)

    def classify(self, ctx: ComponentContext, prefer: str | None = None):
        """Case label for a context plus whatever was computed to decide it."""
        g = self.g
        zbip = bipartition(g, ctx.far)
        if isinstance(zbip, OddCycle):
            return "odd-far-part", None
        nails = lone_nails(g, ctx.near, ctx.far)
        if not nails and prefer == "one-green":
            label, info = self._classify_green(ctx)
            if label == "one-green":
                return label, info
        if find_induced_c5(g, ctx.piece) is None:
            return "c5-free", None
        if nails:
            return "lone-nail", nails
        return self._classify_green(ctx)

    def _classify_green(self, ctx: ComponentContext):
        infos, bad = green_info_for(self.g, ctx.near, ctx.far)
        if bad:
            h, comp = bad[0]
            self.violation("one-sided contact when no nail exists", f"{h} touches both sides of {members(comp)}")
        greens = [t for t in infos if t.green]
        if not greens:
            return "no-green", infos
        count = Counter(h for t in greens for h in t.proper())
        if any(c >= 2 for c in count.values()):
            return "shared-contact", greens
        if any(t.proper(PROPER_SIDE1) and t.proper(PROPER_SIDE2) for t in greens):
            return "two-sided-green", greens
        oriented = [t if t.proper(PROPER_SIDE1) else t.swapped() for t in greens]
        if len(oriented) == 1:
            return "one-green", oriented
        return "several-green", oriented

    def solve_component(self, ctx: ComponentContext, depth: int, limit: int = ANY, prefer: str | None = None) -> _Part:
        self._enter(depth)
        label, info = self.classify(ctx, prefer)
        if CASE_RANK[label] > limit and self.strict:
            self.violation("case order", f"piece {members(ctx.piece)} under ({ctx.pivot}, {ctx.anchor}) is in case {label}, allowed rank {limit}")
        if label == "c5-free":
            self.stats.branches["c5-free"] += 1
            return self.solve_nearly_bipartite(ctx.piece, depth)
        self.stats.branches[label] += 1
        if label == "odd-far-part":
            return self.case_odd_far_part(ctx, depth)
        if label == "lone-nail":
            return self.case_lone_nail(ctx, depth)
        if label == "no-green":
            return self.case_no_green(ctx, depth)
        if label == "shared-contact":
            return self.case_shared_contact(ctx, info, depth)
        if label == "two-sided-green":
            return self.case_two_sided_green(ctx, info, depth)
        if label == "one-green":
            return self.case_one_green(ctx, info[0], depth)
        return self.case_several_green(ctx, info, depth)

    def solve_connected(self, comp: VertexSet, depth: int = 0) -> _Part:
        """Top-level recursion on a connected vertex set: best of ``w(v) + alpha(A(v))``."""
        g, adj = self.g, self.adj
        if find_induced_c5(g, comp) is None:
            return self.solve_nearly_bipartite(comp, depth)
        self.stats.branches["pivot"] += 1
        options = []
        for v in iter_members(comp):
            anti = comp & ~adj[v] & ~(1 << v)
            parts = []
            isolated = 0
            for piece in connected_components(g, anti):
                if piece & (piece - 1) == 0:
                    isolated |= piece
                    continue
                ctx = self.make_context(v, None, piece, comp)
                parts.append(self.solve_component(ctx, depth + 1))
            part = self._join(parts) if parts else _Part(0, 0, [0])
            options.append(self._add_vertices(part, isolated | (1 << v)))
        return self._best(options)

    # -------------------------------------------------------------- cases

    def _sub(self, ctx: ComponentContext, depth: int, limit: int, prefer: str | None = None):
        def run(scope: VertexSet, *_):
            return self.subproblem(scope, ctx.pivot, ctx.anchor, depth + 1, limit, prefer)

        return run

    def _split_on(self, ctx: ComponentContext, scope: VertexSet, blockers: VertexSet, depth: int, limit: int) -> _Part:
        """Best of ``scope - N(y)`` for each ``y`` in ``blockers`` and ``scope - blockers``."""
        run = self._sub(ctx, depth, limit)
        options = [run(scope & ~self.adj[y]) for y in iter_members(blockers & scope)]
        options.append(run(scope & ~blockers))
        return self._best(options)

    def case_no_green(self, ctx: ComponentContext, depth: int) -> _Part:
        g, adj = self.g, self.adj
        triples = {}
        for h in iter_members(ctx.near):
            found = {(1 << x) | (1 << y) | (1 << z) for x, y, z in doubly_contacted_triples(g, h, ctx.far)}
            if found:
                triples[h] = found
        run = self._sub(ctx, depth, C5_FREE)
        if not triples:
            return run(ctx.piece)

        def ge(a: int, b: int) -> bool:
            return all(adj[a] & t for t in triples[b])

        order = order_by_domination(list(triples), ge, on_failure=lambda r: self.violation("domination order (no-green case)", f"{r}"))
        return eliminate_sequence(g, ctx.piece, order, run, run, self._best)

    def case_one_green(self, ctx: ComponentContext, target: GreenInfo, depth: int) -> _Part:
        g, adj = self.g, self.adj
        side1 = target.bip.side1
        others = ctx.far & ~target.component
        if not others:
            self.stats.branches["one-green/spanning"] += 1
            to_side2 = 0
            for h in iter_members(ctx.near):
                if adj[h] & side1:
                    to_side2 |= 1 << h
            side1 = side1 | (ctx.near & ~to_side2)
            side2 = target.bip.side2 | to_side2
            bip = Bipartition(side1, side2)
            for s in (side1, side2):
                if not is_independent(g, s):
                    self.violation("single green component spans the piece", "near set and target do not form a bipartite graph")
            return self.solve_bipartite(ctx.piece, bip)
        self.stats.branches["one-green/outside"] += 1
        out = [h for h in target.proper(PROPER_SIDE1) if adj[h] & others]
        out.sort(key=lambda h: (-popcount(adj[h] & side1), h))
        out_mask = sum(1 << h for h in out)

        def step(scope: VertexSet, h: int) -> _Part:
            prefix = ctx.piece & ~scope & ~adj[h]
            blockers = p4_blockers(g, target, h, ctx.near & ~prefix)
            return self._split_on(ctx, scope, blockers, depth, 1)

        def tail(scope: VertexSet) -> _Part:
            run = self._sub(ctx, depth, 1)
            joins = [h for h in target.half_joins() if not out_mask >> h & 1]
            options = [run(scope & ~adj[h]) for h in joins]
            rest = scope & ~sum(1 << h for h in joins)
            options.append(self._sub(ctx, depth, BIPARTITE)(rest))
            return self._best(options)

        return eliminate_sequence(g, ctx.piece, out, step, tail, self._best)

    def critical_sequence(self, ctx: ComponentContext, greens: list[GreenInfo]) -> list[tuple[int, GreenInfo]]:
        adj = self.adj
        chosen: list[tuple[int, GreenInfo]] = []
        removed = 0
        while True:
            live = [t for t in greens if any(not removed >> h & 1 for h in t.proper())]
            if len(live) < 2:
                return chosen
            best = None
            for i, t in enumerate(live):
                contactors = [h for h in t.proper() if not removed >> h & 1]
                top = max(popcount(adj[h] & t.bip.side1) for h in contactors)
                for h in contactors:
                    if popcount(adj[h] & t.bip.side1) != top:
                        continue
                    if all(o.contacts.get(h) in (HALF_SIDE1, HALF_SIDE2) for j, o in enumerate(live) if j != i):
                        if best is None or h < best[0]:
                            best = (h, t)
            if best is None:
                self.violation("critical vertex exists", f"no critical vertex among {len(live)} green components")
            chosen.append(best)
            removed |= 1 << best[0]

    def case_several_green(self, ctx: ComponentContext, greens: list[GreenInfo], depth: int) -> _Part:
        g = self.g
        crit = self.critical_sequence(ctx, greens)
        owner = {h: t for h, t in crit}

        def step(scope: VertexSet, h: int) -> _Part:
            prefix = ctx.piece & ~scope & ~self.adj[h]
            blockers = p4_blockers(g, owner[h], h, ctx.near & ~prefix)
            return self._split_on(ctx, scope, blockers, depth, 1)

        tail = self._sub(ctx, depth, 2, prefer="one-green")
        return eliminate_sequence(g, ctx.piece, [h for h, _ in crit], step, tail, self._best)

    def case_two_sided_green(self, ctx: ComponentContext, greens: list[GreenInfo], depth: int) -> _Part:
        g, adj = self.g, self.adj
        target = next(t for t in greens if t.proper(PROPER_SIDE1) and t.proper(PROPER_SIDE2))
        if len(target.proper(PROPER_SIDE2)) < len(target.proper(PROPER_SIDE1)):
            target = target.swapped()
        side1 = target.bip.side1
        seq = sorted(target.proper(PROPER_SIDE1), key=lambda h: (-popcount(adj[h] & side1), h))

        def step(scope: VertexSet, h: int) -> _Part:
            prefix = ctx.piece & ~scope & ~adj[h]
            blockers = p4_blockers(g, target, h, ctx.near & ~prefix)
            return self._split_on(ctx, scope, blockers, depth, 3)

        return eliminate_sequence(g, ctx.piece, seq, step, self._sub(ctx, depth, 3), self._best)

    def case_shared_contact(self, ctx: ComponentContext, greens: list[GreenInfo], depth: int) -> _Part:
        g, adj = self.g, self.adj
        touched: dict[int, list[VertexSet]] = {}
        for t in greens:
            for h in t.proper():
                touched.setdefault(h, []).append(t.component)

        def ge(a: int, b: int) -> bool:
            return all(adj[a] & comp for comp in touched[b])

        order = order_by_domination(
            list(touched),
            ge,
            key=lambda h: (-popcount(adj[h] & ctx.far), h),
            on_failure=lambda r: self.violation("domination order (two green components)", f"{r}"),
        )
        run = self._sub(ctx, depth, 4)
        return eliminate_sequence(g, ctx.piece, order, run, run, self._best)

    def nail_reduction(self, ctx: ComponentContext, scope_k: VertexSet, h_star: int, h: int, depth: int) -> _Part:
        """Solve ``scope_k - N(h_star) - N(h)`` for a nail ``h`` by branching on its far set."""
        adj = self.adj
        far_set = nail_far_set(self.g, ctx.near & scope_k, ctx.far & scope_k, h)
        S = scope_k & ~adj[h_star] & ~adj[h]
        run = self._sub(ctx, depth, 5)
        options = [run(S & ~adj[x]) for x in iter_members(far_set & S)]
        options.append(run(S & ~far_set))
        return self._best(options)

    def case_lone_nail(self, ctx: ComponentContext, depth: int) -> _Part:
        g, adj = self.g, self.adj
        order = sorted(iter_members(ctx.near), key=lambda h: (-popcount(adj[h] & ctx.far), h))

        def step(scope: VertexSet, h: int) -> _Part:
            # the piece minus the earlier nails; N(h) holds no other near vertex
            scope_k = scope | (adj[h] & ctx.piece)
            nails = lone_nails(g, ctx.near & scope, ctx.far & scope)
            options = [self.nail_reduction(ctx, scope_k, h, a, depth) for a in nails]
            options.append(self._sub(ctx, depth, 5)(scope & ~sum(1 << a for a in nails)))
            return self._best(options)

        return eliminate_sequence(g, ctx.piece, order, step, self._sub(ctx, depth, BIPARTITE), self._best)

    def case_odd_far_part(self, ctx: ComponentContext, depth: int) -> _Part:
        g, adj = self.g, self.adj
        odd = [c for c in connected_components(g, ctx.far) if isinstance(bipartition(g, c), OddCycle)]
        if len(odd) != 1:
            self.violation("at most one non-bipartite far component", f"{len(odd)} found")
        z_star = odd[0]
        h_star = [h for h in iter_members(ctx.near) if adj[h] & z_star]
        run = self._sub(ctx, depth, 6)

        def tail(scope: VertexSet) -> _Part:
            self._enter(depth + 1)
            rest = scope & ~z_star
            star_ctx = self.make_context(ctx.anchor, h_star[0], z_star)
            parts = [self.solve_component(star_ctx, depth + 2, 6)]
            if rest:
                parts.append(self.subproblem(rest, ctx.pivot, ctx.anchor, depth + 1, 6))
            return self._join(parts)

        return eliminate_sequence(g, ctx.piece, h_star, run, tail, self._best)

    # --------------------------------------------------------------- entry

    def solve(self) -> SolveResult:
        g = self.g
        parts = []
        isolated = 0
        for comp in connected_components(g, g.all_vertices):
            if comp & (comp - 1) == 0:
                isolated |= comp
            else:
                parts.append(self.solve_connected(comp, 0))
        part = self._add_vertices(self._join(parts) if parts else _Part(0, 0, [0]), isolated)
        if not is_independent(g, part.solution) or set_weight(g, part.solution) != part.weight:
            raise ContextViolation("result check", "solution is not independent or weight mismatch")
        leaves = sorted(set(part.leaves)) if self.record_leaves else []
        return SolveResult(part.weight, part.solution, leaves, self.stats, self.record_leaves)


def solve(g: WeightedGraph, **kwargs) -> SolveResult:
    """Maximum weight independent set of an (S124, triangle)-free graph."""
    return Solver(g, **kwargs).solve()


def solve_nearly_bipartite(g: WeightedGraph, within: VertexSet | None = None) -> SolveResult:
    s = Solver(g)
    part = s.solve_nearly_bipartite(g.all_vertices if within is None else within)
    return SolveResult(part.weight, part.solution, sorted(set(part.leaves)), s.stats)


def make_context(g: WeightedGraph, v: int, piece: VertexSet, within: VertexSet | None = None) -> ComponentContext:
    """Context for a piece of the anti-neighbourhood of ``v``, anchored at the least neighbour of ``v`` touching it."""
    return Solver(g).make_context(v, None, piece, within)


def solve_component(g: WeightedGraph, ctx: ComponentContext, **kwargs) -> SolveResult:
    s = Solver(g, **kwargs)
    part = s.solve_component(ctx, 1)
    return SolveResult(part.weight, part.solution, sorted(set(part.leaves)), s.stats, s.record_leaves)


def green_info(g: WeightedGraph, ctx: ComponentContext) -> list[GreenInfo]:
    infos, bad = green_info_for(g, ctx.near, ctx.far)
    if bad:
        raise ContextViolation("one-sided contact", f"{bad[0][0]} touches both sides of a far component")
    return infos
