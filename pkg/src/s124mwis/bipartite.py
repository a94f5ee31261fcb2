"""Exact MWIS on bipartite graphs through minimum vertex cover / maximum flow."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ContractViolation
from .graph import Bipartition, VertexSet, WeightedGraph, iter_members, set_weight


class FlowNetwork:
    """Residual network for Dinic's algorithm.

    Arcs are stored in flat lists; arc ``i ^ 1`` is the reverse of arc ``i``.
    """

    def __init__(self, num_nodes: int):
        self.num_nodes = num_nodes
        self.head: list[list[int]] = [[] for _ in range(num_nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, capacity: int) -> int:
        if capacity < 0:
            raise ValueError("capacities must be non-negative")
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(capacity)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)
        return len(self.to) - 2

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.num_nodes
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.head[u]:
                v = self.to[a]
                if self.cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _blocking_flow(self, s: int, t: int, level: list[int]) -> int:
        # iterative DFS with per-node arc pointers
        ptr = [0] * self.num_nodes
        total = 0
        head, to, cap = self.head, self.to, self.cap
        while True:
            path: list[int] = []
            u = s
            while u != t:
                arcs = head[u]
                while ptr[u] < len(arcs):
                    a = arcs[ptr[u]]
                    if cap[a] > 0 and level[to[a]] == level[u] + 1:
                        break
                    ptr[u] += 1
                if ptr[u] == len(arcs):
                    if u == s:
                        return total
                    level[u] = -1  # dead end
                    a = path.pop()
                    u = to[a ^ 1]
                    ptr[u] += 1
                    continue
                path.append(a)
                u = to[a]
            push = min(cap[a] for a in path)
            for a in path:
                cap[a] -= push
                cap[a ^ 1] += push
            total += push

    def max_flow(self, s: int, t: int) -> tuple[int, set[int]]:
        """Maximum flow value and the source side of a minimum cut."""
        if s == t:
            raise ValueError("source and sink must differ")
        value = 0
        while (level := self._levels(s, t)) is not None:
            value += self._blocking_flow(s, t, level)
        reach = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.head[u]:
                v = self.to[a]
                if self.cap[a] > 0 and v not in reach:
                    reach.add(v)
                    queue.append(v)
        return value, reach


def max_flow(net: FlowNetwork, s: int, t: int) -> tuple[int, set[int]]:
    return net.max_flow(s, t)


@dataclass(frozen=True)
class BipartiteSolution:
    weight: int
    solution: VertexSet
    cover: VertexSet


def mwis_bipartite(g: WeightedGraph, within: VertexSet, bip: Bipartition) -> BipartiteSolution:
    """Maximum weight independent set of the bipartite graph ``G[within]``.

    The optimum is the complement of a minimum weight vertex cover, read from a
    minimum source/sink cut.  Zero-weight vertices never enter the returned set.
    """
    side1, side2 = bip.side1, bip.side2
    if side1 & side2 or (side1 | side2) != within:
        raise ContractViolation("bipartition does not partition the vertex set")
    adj, w = g.adj, g.weights
    for u in iter_members(side1):
        if adj[u] & side1:
            raise ContractViolation(f"side 1 is not independent at vertex {u}")
    for u in iter_members(side2):
        if adj[u] & side2:
            raise ContractViolation(f"side 2 is not independent at vertex {u}")

    positive = [v for v in iter_members(within) if w[v] > 0]
    live = 0
    for v in positive:
        live |= 1 << v
    # vertices with no live neighbour are always taken; only the rest need a flow
    touched = [v for v in positive if adj[v] & live]
    free = live
    for v in touched:
        free &= ~(1 << v)
    cover = 0
    if touched:
        index = {v: i + 2 for i, v in enumerate(touched)}
        total = sum(w[v] for v in touched)
        inf = total + 1
        net = FlowNetwork(len(touched) + 2)
        for v in touched:
            if side1 >> v & 1:
                net.add_arc(0, index[v], w[v])
                for x in iter_members(adj[v] & live):
                    net.add_arc(index[v], index[x], inf)
            else:
                net.add_arc(index[v], 1, w[v])
        value, reach = net.max_flow(0, 1)
        for v in touched:
            on_source = index[v] in reach
            if (side1 >> v & 1) != on_source:
                cover |= 1 << v
        cover_weight = set_weight(g, cover)
        if cover_weight != value:
            raise AssertionError(f"cut weight {cover_weight} != flow value {value}")
    # zero-weight vertices belong to the cover so that it touches every edge
    cover |= within & ~live
    solution = (live & ~cover) | free
    weight = set_weight(g, solution)
    total_weight = set_weight(g, within)
    if weight + set_weight(g, cover) != total_weight:
        raise AssertionError("independent set and cover weights do not sum to the total")
    for v in iter_members(solution):
        if adj[v] & solution:
            raise AssertionError("flow solution is not independent")
    return BipartiteSolution(weight, solution, cover)
