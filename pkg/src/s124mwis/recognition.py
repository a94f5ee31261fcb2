"""Searches for induced triangles, 5-cycles and S_{1,2,4} subgraphs.

All searches scan vertices in ascending id order so the witness returned for a
given graph never changes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .graph import VertexSet, WeightedGraph, iter_members, popcount, vset

# Edges of S_{1,2,4} in canonical labelling: center 0, arm-1 tip 1,
# arm-2 path 2-3, arm-4 path 4-5-6-7.
S124_EDGES = ((0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7))


@dataclass(frozen=True)
class ForbiddenWitness:
    kind: Literal["Triangle", "C5", "S124"]
    vertices: tuple[int, ...]

    @property
    def mask(self) -> VertexSet:
        return vset(self.vertices)


def _pattern_edges(kind: str) -> tuple[tuple[int, int], ...]:
    if kind == "Triangle":
        return ((0, 1), (1, 2), (0, 2))
    if kind == "C5":
        return ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))
    if kind == "S124":
        return S124_EDGES
    raise ValueError(kind)


def verify_witness(g: WeightedGraph, w: ForbiddenWitness) -> bool:
    """Check every vertex pair of the witness against the named pattern."""
    vs = w.vertices
    if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
        return False
    want = {frozenset(e) for e in _pattern_edges(w.kind)}
    if len(vs) != 1 + max(max(e) for e in want):
        return False
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if g.has_edge(vs[i], vs[j]) != (frozenset((i, j)) in want):
                return False
    return True


def find_triangle(g: WeightedGraph, within: VertexSet | None = None) -> ForbiddenWitness | None:
    """Lexicographically least triangle."""
    adj = g.adj
    within = g.all_vertices if within is None else within
    for a in iter_members(within):
        higher = within >> (a + 1) << (a + 1)
        for b in iter_members(adj[a] & higher):
            common = adj[a] & adj[b] & (within >> (b + 1) << (b + 1))
            if common:
                c = (common & -common).bit_length() - 1
                return ForbiddenWitness("Triangle", (a, b, c))
    return None


def _c5_search(g: WeightedGraph, within: VertexSet, first_only: bool):
    # cycle a-b-c-d-e with a least and b < e fixes one rotation/reflection
    adj = g.adj
    found = []
    for a in iter_members(within):
        above = within >> (a + 1) << (a + 1)
        na = adj[a] & above
        for b in iter_members(na):
            nab = adj[a] | adj[b]
            for e in iter_members(na >> (b + 1) << (b + 1)):
                if adj[b] >> e & 1:
                    continue
                for c in iter_members(adj[b] & above & ~adj[a] & ~adj[e] & ~(1 << e)):
                    ds = adj[c] & adj[e] & above & ~nab & ~(1 << b)
                    for d in iter_members(ds):
                        found.append(ForbiddenWitness("C5", (a, b, c, d, e)))
                        if first_only:
                            return found
    return found


def find_induced_c5(g: WeightedGraph, within: VertexSet | None = None) -> ForbiddenWitness | None:
    """First induced 5-cycle of ``G[within]`` in canonical search order.

    Chordlessness is checked explicitly, so the search is also valid on
    graphs that contain triangles.
    """
    within = g.all_vertices if within is None else within
    found = _c5_search(g, within, True)
    return found[0] if found else None


def enumerate_induced_c5(g: WeightedGraph, within: VertexSet | None = None) -> list[ForbiddenWitness]:
    """Every induced 5-cycle of ``G[within]``, each once up to rotation and reflection."""
    within = g.all_vertices if within is None else within
    return _c5_search(g, within, False)


def find_induced_s124(g: WeightedGraph, within: VertexSet | None = None) -> ForbiddenWitness | None:
    """Backtracking search over (center, arm-1 tip, arm-2 path, arm-4 path)."""
    within = g.all_vertices if within is None else within
    adj = g.adj

    def cn(x: int) -> int:
        return adj[x] | (1 << x)

    for a in iter_members(within):
        na = adj[a] & within
        if popcount(na) < 3:
            continue
        ca = cn(a)
        for p in iter_members(na):
            cp = cn(p)
            for q1 in iter_members(na & ~cp):
                cq1 = cn(q1)
                for q2 in iter_members(adj[q1] & within & ~ca & ~cp):
                    cq2 = cn(q2)
                    block = ca | cp | cq1 | cq2
                    for r1 in iter_members(na & ~cp & ~cq1 & ~cq2):
                        cr1 = cn(r1)
                        for r2 in iter_members(adj[r1] & within & ~block):
                            cr2 = cn(r2)
                            for r3 in iter_members(adj[r2] & within & ~block & ~cr1):
                                r4s = adj[r3] & within & ~block & ~cr1 & ~cr2
                                if r4s:
                                    r4 = (r4s & -r4s).bit_length() - 1
                                    return ForbiddenWitness("S124", (a, p, q1, q2, r1, r2, r3, r4))
    return None


def check_class(g: WeightedGraph) -> ForbiddenWitness | None:
    """``None`` when ``g`` is triangle-free and S124-free, else the first witness (triangle first)."""
    return find_triangle(g) or find_induced_s124(g)


def classify_c5(c5: ForbiddenWitness, h_set: VertexSet) -> tuple[int | None, int | None]:
    """Type of an induced 5-cycle relative to the independent set ``h_set``.

    Returns ``(1, nail)``, ``(2, None)`` or ``(None, None)`` for any other
    count of cycle vertices in ``h_set``.
    """
    inside = [v for v in c5.vertices if h_set >> v & 1]
    if len(inside) == 1:
        return 1, inside[0]
    if len(inside) == 2:
        return 2, None
    return None, None
