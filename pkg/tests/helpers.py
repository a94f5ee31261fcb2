"""Small graph builders shared by the tests."""

from s124mwis.graph import WeightedGraph
from s124mwis.recognition import S124_EDGES


def path(n, weights=None):
    return WeightedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)], weights)


def cycle(n, weights=None):
    return WeightedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], weights)


def complete(n, weights=None):
    return WeightedGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], weights)


def edgeless(n, weights=None):
    return WeightedGraph.from_edges(n, [], weights)


def star(leaves):
    return WeightedGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def s124():
    return WeightedGraph.from_edges(8, S124_EDGES)


def random_graph(rng, n, p, weights=(0, 100)):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return WeightedGraph.from_edges(n, edges, [rng.randint(*weights) for _ in range(n)])


def random_bipartite(rng, n, p, weights=(0, 100)):
    side = [rng.random() < 0.5 for _ in range(n)]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if side[u] != side[v] and rng.random() < p]
    return WeightedGraph.from_edges(n, edges, [rng.randint(*weights) for _ in range(n)]), side
