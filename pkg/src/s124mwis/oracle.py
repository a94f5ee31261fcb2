"""Exponential-time ground truth used to check the solver."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OracleBudgetExceeded
from .graph import (
    OddCycle,
    VertexSet,
    WeightedGraph,
    bipartition,
    iter_members,
    members,
    popcount,
    set_weight,
)


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 26
    max_nodes: int = 5_000_000


def subset_mwis(g: WeightedGraph, within: VertexSet | None = None) -> tuple[int, VertexSet]:
    """Scan all ``2^k`` subsets of ``within`` (k <= 20) with numpy.

    Independence and weight are built up one vertex at a time over the
    subset lattice, so no branching logic is shared with ``oracle_mwis``.
    """
    within = g.all_vertices if within is None else within
    vs = members(within)
    k = len(vs)
    if k > 20:
        raise OracleBudgetExceeded(f"subset enumeration limited to 20 vertices, got {k}")
    pos = {v: i for i, v in enumerate(vs)}
    weight = np.zeros(1 << k, dtype=np.int64)
    indep = np.ones(1 << k, dtype=bool)
    for i, v in enumerate(vs):
        lower = np.arange(1 << i, dtype=np.int64)
        nb_local = sum(1 << pos[x] for x in iter_members(g.adj[v] & within) if pos[x] < i)
        block = slice(1 << i, 1 << (i + 1))
        weight[block] = weight[: 1 << i] + g.weights[v]
        indep[block] = indep[: 1 << i] & ((lower & nb_local) == 0)
    scores = np.where(indep, weight, -1)
    best = int(np.argmax(scores))
    solution = 0
    for i, v in enumerate(vs):
        if best >> i & 1:
            solution |= 1 << v
    return int(scores[best]), solution


def oracle_mwis(
    g: WeightedGraph, within: VertexSet | None = None, budget: OracleBudget = OracleBudget()
) -> tuple[int, VertexSet]:
    """Branch and bound: take or drop a maximum-degree vertex, prune on remaining weight."""
    within = g.all_vertices if within is None else within
    if popcount(within) > budget.max_vertices:
        raise OracleBudgetExceeded(f"{popcount(within)} vertices exceed the oracle budget")
    adj, w = g.adj, g.weights
    best_weight = -1
    best_set = 0
    nodes = 0

    def rest_weight(mask: int) -> int:
        return sum(w[v] for v in iter_members(mask))

    def search(mask: int, chosen: int, value: int) -> None:
        nonlocal best_weight, best_set, nodes
        nodes += 1
        if nodes > budget.max_nodes:
            raise OracleBudgetExceeded("search node budget exhausted")
        # isolated vertices are always worth taking
        pivot, pivot_deg = -1, 0
        isolated = 0
        for v in iter_members(mask):
            d = popcount(adj[v] & mask)
            if d == 0:
                isolated |= 1 << v
            elif d > pivot_deg:
                pivot, pivot_deg = v, d
        if isolated:
            value += rest_weight(isolated)
            chosen |= isolated
            mask &= ~isolated
        if value + rest_weight(mask) <= best_weight:
            return
        if pivot < 0:
            best_weight, best_set = value, chosen
            return
        search(mask & ~adj[pivot] & ~(1 << pivot), chosen | (1 << pivot), value + w[pivot])
        search(mask & ~(1 << pivot), chosen, value)

    search(within, 0, 0)
    return best_weight, best_set


def enumerate_maximal_is(g: WeightedGraph, within: VertexSet | None = None, limit: int = 20) -> list[VertexSet]:
    """All maximal independent sets of ``G[within]`` (Bron-Kerbosch with pivoting on the complement)."""
    within = g.all_vertices if within is None else within
    if popcount(within) > limit:
        raise OracleBudgetExceeded(f"maximal-IS enumeration limited to {limit} vertices")
    adj = g.adj
    # candidates compatible with v are its non-neighbours
    compat = {v: within & ~adj[v] & ~(1 << v) for v in iter_members(within)}
    out: list[VertexSet] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(iter_members(p | x), key=lambda u: popcount(p & compat[u]))
        for v in iter_members(p & ~compat[pivot]):
            expand(r | (1 << v), p & compat[v], x & compat[v])
            p &= ~(1 << v)
            x |= 1 << v

    if within:
        expand(0, within, 0)
    else:
        out.append(0)
    return out


@dataclass(frozen=True)
class CoverCounterexample:
    reason: str  # "uncovered" or "not-bipartite"
    vertices: VertexSet


def verify_cover(
    g: WeightedGraph, leaves: list[VertexSet], within: VertexSet | None = None
) -> CoverCounterexample | None:
    """Check that every maximal independent set lies inside some leaf and every leaf is bipartite."""
    for leaf in leaves:
        if isinstance(bipartition(g, leaf), OddCycle):
            return CoverCounterexample("not-bipartite", leaf)
    for s in enumerate_maximal_is(g, within):
        if not any(s & ~leaf == 0 for leaf in leaves):
            return CoverCounterexample("uncovered", s)
    return None


def check_solution(g: WeightedGraph, solution: VertexSet, weight: int) -> bool:
    return set_weight(g, solution) == weight and all(not (g.adj[v] & solution) for v in iter_members(solution))
