"""Immutable vertex-weighted graphs and the elementary queries on them.

Vertex sets are plain ``int`` bitmasks: bit ``i`` is set iff vertex ``i`` is a
member.  Every subproblem in the solver is a mask over the ids of the original
graph, so sets coming from different recursion levels can be intersected
directly.  ``vset`` and ``members`` convert to and from ordinary iterables.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

VertexSet = int


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Vertex ids of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: VertexSet):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: VertexSet) -> int:
    """Least vertex id in a non-empty mask."""
    return (mask & -mask).bit_length() - 1


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Bipartition:
    side1: VertexSet
    side2: VertexSet

    def swapped(self) -> "Bipartition":
        return Bipartition(self.side2, self.side1)


@dataclass(frozen=True)
class OddCycle:
    """Closed odd walk returned when a vertex set does not induce a bipartite graph.

    ``cycle`` lists the vertices in order; consecutive entries (and the last
    and first) are adjacent.
    """

    cycle: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Simple undirected graph on ``0..n-1`` with non-negative integer weights."""

    n: int
    adj: tuple[VertexSet, ...]
    weights: tuple[int, ...]
    _edge_count: int = field(default=0, repr=False)

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Sequence[int]], weights: Sequence[int] | None = None
    ) -> "WeightedGraph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        if weights is None:
            w = (1,) * n
        else:
            w = tuple(int(x) for x in weights)
            if len(w) != n:
                raise ValueError(f"expected {n} weights, got {len(w)}")
            if any(x < 0 for x in w):
                raise ValueError("weights must be non-negative")
        return cls(n, tuple(adj), w, m)

    def with_weights(self, weights: Sequence[int]) -> "WeightedGraph":
        return WeightedGraph.from_edges(self.n, self.edges(), weights)

    @property
    def all_vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return self._edge_count

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int, within: VertexSet | None = None) -> int:
        nb = self.adj[v] if within is None else self.adj[v] & within
        return popcount(nb)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self.weights == other.weights

    def __hash__(self) -> int:
        return hash((self.n, self.adj, self.weights))


def _check_vertex(g: WeightedGraph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")


def neighbors(g: WeightedGraph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return g.adj[v]


def closed_neighborhood(g: WeightedGraph, v: int) -> VertexSet:
    return g.adj[v] | (1 << v)


def anti_neighborhood(g: WeightedGraph, v: int) -> VertexSet:
    """All vertices other than ``v`` and its neighbours."""
    _check_vertex(g, v)
    return g.all_vertices & ~(g.adj[v] | (1 << v))


def neighborhood_of_set(g: WeightedGraph, s: VertexSet) -> VertexSet:
    """Union of the open neighbourhoods of the vertices of ``s``."""
    out = 0
    for v in iter_members(s):
        out |= g.adj[v]
    return out


def induced_subgraph(g: WeightedGraph, s: VertexSet) -> tuple[WeightedGraph, list[int]]:
    """Copy of ``G[s]`` relabelled to ``0..|s|-1``.

    Returns the new graph and ``old_ids`` with ``old_ids[new] == old``; the
    inverse map is ``{old: new for new, old in enumerate(old_ids)}``.
    """
    if s & ~g.all_vertices:
        raise ValueError("vertex set is not a subset of the graph")
    old_ids = members(s)
    new_id = {old: i for i, old in enumerate(old_ids)}
    edges = [
        (new_id[u], new_id[v])
        for u in old_ids
        for v in iter_members(g.adj[u] & s)
        if u < v
    ]
    sub = WeightedGraph.from_edges(len(old_ids), edges, [g.weights[u] for u in old_ids])
    return sub, old_ids


def component_of(g: WeightedGraph, start: int, within: VertexSet) -> VertexSet:
    comp = 1 << start
    frontier = comp
    while frontier:
        grown = 0
        for u in iter_members(frontier):
            grown |= g.adj[u]
        grown &= within & ~comp
        comp |= grown
        frontier = grown
    return comp


def connected_components(g: WeightedGraph, within: VertexSet) -> list[VertexSet]:
    """Components of ``G[within]``, ordered by least member."""
    out = []
    rest = within
    while rest:
        comp = component_of(g, lowest(rest), within)
        out.append(comp)
        rest &= ~comp
    return out


def is_nontrivial(g: WeightedGraph, comp: VertexSet) -> bool:
    """A component is nontrivial when it contains an edge."""
    return any(g.adj[v] & comp for v in iter_members(comp))


def bipartition(g: WeightedGraph, within: VertexSet) -> Bipartition | OddCycle:
    """Two-colour ``G[within]`` by BFS from the least vertex of each component.

    Side 1 holds the colour of each component's least vertex.
    """
    side = {}
    parent = {}
    s1 = s2 = 0
    for start in iter_members(within):
        if start in side:
            continue
        side[start] = 0
        parent[start] = -1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for x in iter_members(g.adj[u] & within):
                if x not in side:
                    side[x] = 1 - side[u]
                    parent[x] = u
                    queue.append(x)
                elif side[x] == side[u]:
                    return OddCycle(_odd_cycle(u, x, parent))
    for v, c in side.items():
        if c == 0:
            s1 |= 1 << v
        else:
            s2 |= 1 << v
    return Bipartition(s1, s2)


def _odd_cycle(u: int, x: int, parent: dict[int, int]) -> tuple[int, ...]:
    # tree paths from u and x up to their lowest common ancestor, joined by edge ux
    pu = [u]
    while parent[pu[-1]] != -1:
        pu.append(parent[pu[-1]])
    px = [x]
    while parent[px[-1]] != -1:
        px.append(parent[px[-1]])
    on_u = set(pu)
    j = 0
    while px[j] not in on_u:
        j += 1
    lca = px[j]
    i = pu.index(lca)
    return tuple(pu[: i + 1] + px[:j][::-1])


def shortest_odd_cycle(g: WeightedGraph, within: VertexSet) -> tuple[int, ...] | None:
    """A shortest odd cycle of ``G[within]`` (always induced), or ``None``.

    Used to shrink an odd closed walk to an induced odd cycle on demand.
    """
    best = None
    for s in iter_members(within):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= len(best):
                break
            for x in iter_members(g.adj[u] & within):
                if x not in dist:
                    dist[x] = dist[u] + 1
                    parent[x] = u
                    queue.append(x)
                elif dist[x] == dist[u] and (best is None or 2 * dist[u] + 1 < len(best)):
                    cyc = _odd_cycle(u, x, parent)
                    if len(cyc) == 2 * dist[u] + 1:
                        best = cyc
    return best


def is_independent(g: WeightedGraph, s: VertexSet) -> bool:
    return all(not (g.adj[v] & s) for v in iter_members(s))


def set_weight(g: WeightedGraph, s: VertexSet) -> int:
    w = g.weights
    return sum(w[v] for v in iter_members(s))
