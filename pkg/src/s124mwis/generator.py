"""Instance families for testing: random triangle-free graphs, blow-ups and fixtures."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GenerationFailed
from .graph import WeightedGraph
from .recognition import ForbiddenWitness, check_class, find_induced_c5, find_induced_s124

FAMILIES = ("random-triangle-free", "grown", "c5-blowup", "path", "cycle", "groetzsch", "petersen", "star-of-c5s")


@dataclass(frozen=True)
class GenSpec:
    family: str = "random-triangle-free"
    n: int = 12
    edge_density: float | None = None  # None picks default_density(n), or 0.4 for grown
    weight_range: tuple[int, int] = (1, 1)
    seed: int = 0
    class_sizes: tuple[int, ...] | None = None  # c5-blowup only
    max_retries: int = 200


@dataclass(frozen=True)
class Generated:
    graph: WeightedGraph
    witness: ForbiddenWitness | None

    @property
    def in_class(self) -> bool:
        return self.witness is None


def _weights(rng: random.Random, n: int, lo_hi: tuple[int, int]) -> list[int]:
    lo, hi = lo_hi
    if lo < 0 or hi < lo:
        raise ValueError(f"bad weight range {lo_hi}")
    return [rng.randint(lo, hi) for _ in range(n)]


def default_density(n: int) -> float:
    # about 1.5 expected edges per vertex keeps whole-sample S124 rejection above 15% up to n = 30
    return min(0.3, 1.5 / max(n, 1))


def random_triangle_free_edges(rng: random.Random, n: int, density: float) -> list[tuple[int, int]]:
    """Visit vertex pairs in random order, keep each with probability ``density`` unless it closes a triangle."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    adj = [0] * n
    edges = []
    for u, v in pairs:
        if rng.random() >= density or adj[u] & adj[v]:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        edges.append((u, v))
    return edges


def c5_blowup(sizes: tuple[int, ...], weights: list[int] | None = None) -> WeightedGraph:
    """Replace vertex ``i`` of a 5-cycle by an independent class of ``sizes[i]`` vertices."""
    if len(sizes) != 5 or min(sizes) < 1:
        raise ValueError("c5-blowup needs five positive class sizes")
    classes = []
    start = 0
    for s in sizes:
        classes.append(range(start, start + s))
        start += s
    edges = [(a, b) for i in range(5) for a in classes[i] for b in classes[(i + 1) % 5]]
    return WeightedGraph.from_edges(start, edges, weights)


def blowup_alpha(sizes: tuple[int, ...]) -> int:
    """Unit-weight independence number of a 5-cycle blow-up: best pair of non-adjacent classes."""
    return max(sizes[i] + sizes[(i + 2) % 5] for i in range(5))


def groetzsch_edges() -> tuple[int, list[tuple[int, int]]]:
    # Mycielskian of C5: cycle 0..4, shadows 5..9, apex 10
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        for j in ((i + 1) % 5, (i - 1) % 5):
            edges.append((5 + i, j))
        edges.append((5 + i, 10))
    return 11, edges


def petersen_edges() -> tuple[int, list[tuple[int, int]]]:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return 10, outer + spokes + inner


def star_of_c5s_edges(k: int) -> tuple[int, list[tuple[int, int]]]:
    """``k`` five-cycles sharing vertex 0."""
    edges = []
    n = 1
    for _ in range(k):
        a, b, c, d = n, n + 1, n + 2, n + 3
        edges += [(0, a), (a, b), (b, c), (c, d), (d, 0)]
        n += 4
    return n, edges


def split_blowup_sizes(n: int) -> tuple[int, ...]:
    base, extra = divmod(max(n, 5), 5)
    return tuple(base + (1 if i < extra else 0) for i in range(5))


def generate(params: GenSpec) -> Generated:
    rng = random.Random(params.seed)
    fam = params.family
    density = params.edge_density
    if fam == "random-triangle-free":
        if density is None:
            density = default_density(params.n)
        for _ in range(params.max_retries):
            edges = random_triangle_free_edges(rng, params.n, density)
            g = WeightedGraph.from_edges(params.n, edges)
            if find_induced_s124(g) is None:
                g = g.with_weights(_weights(rng, params.n, params.weight_range))
                return Generated(g, None)
        raise GenerationFailed(f"no S124-free sample in {params.max_retries} tries at density {density}")
    if fam == "grown":
        g = grown_class_graph(rng, params.n, 0.4 if density is None else density)
        return Generated(g.with_weights(_weights(rng, params.n, params.weight_range)), None)
    if fam == "c5-blowup":
        sizes = params.class_sizes or split_blowup_sizes(params.n)
        g = c5_blowup(sizes)
    elif fam == "path":
        g = WeightedGraph.from_edges(params.n, [(i, i + 1) for i in range(params.n - 1)])
    elif fam == "cycle":
        if params.n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        g = WeightedGraph.from_edges(params.n, [(i, (i + 1) % params.n) for i in range(params.n)])
    elif fam == "groetzsch":
        g = WeightedGraph.from_edges(*groetzsch_edges())
    elif fam == "petersen":
        g = WeightedGraph.from_edges(*petersen_edges())
    elif fam == "star-of-c5s":
        g = WeightedGraph.from_edges(*star_of_c5s_edges(max(1, (params.n - 1) // 4)))
    else:
        raise ValueError(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")
    g = g.with_weights(_weights(rng, g.n, params.weight_range))
    return Generated(g, check_class(g))


def grown_class_graph(
    rng: random.Random, n: int, attach: float = 0.4, tries: int = 30, forbid_c5: bool = False
) -> WeightedGraph:
    """Add vertices one at a time, each joined to a random independent set of earlier vertices.

    An attachment that would create an induced S124 is redrawn; after ``tries``
    failures the new vertex stays isolated, so this never fails.  Much denser in
    5-cycles than rejection sampling of whole graphs.  With ``forbid_c5`` the
    attachment must not create an induced 5-cycle either.
    """
    adj = [0] * n
    for x in range(n):
        for _ in range(tries):
            chosen = 0
            order = list(range(x))
            rng.shuffle(order)
            for u in order:
                if rng.random() < attach and not adj[u] & chosen:
                    chosen |= 1 << u
            trial = adj[:x] + [chosen] + [0] * (n - x - 1)
            for u in range(x):
                if chosen >> u & 1:
                    trial[u] |= 1 << x
            g = WeightedGraph(n, tuple(trial), tuple([1] * n), sum(bin(a).count("1") for a in trial) // 2)
            if not chosen or (find_induced_s124(g) is None and not (forbid_c5 and find_induced_c5(g))):
                adj = trial
                break
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1]
    return WeightedGraph.from_edges(n, edges)


def random_class_graph(rng: random.Random, n: int, density: float, weight_range=(0, 100), retries: int = 200) -> WeightedGraph:
    """One S124-free triangle-free graph by whole-sample rejection (used by the fuzz loop).

    The density is lowered by 20% after every 10 rejected samples so large
    ``n`` still terminates.
    """
    for attempt in range(retries):
        if attempt and attempt % 10 == 0:
            density *= 0.8
        g = WeightedGraph.from_edges(n, random_triangle_free_edges(rng, n, density))
        if find_induced_s124(g) is None:
            return g.with_weights(_weights(rng, n, weight_range))
    raise GenerationFailed(f"no S124-free sample in {retries} tries")


@dataclass(frozen=True)
class TargetedInstance:
    label: str
    graph: WeightedGraph
    note: str


# Smallest graphs found by a traced random search (grown family, seed 11) whose
# solve passes through each case; frozen here so coverage does not depend on RNG.
_TARGETED = {
    "no-green": (7, [(0, 1), (0, 2), (1, 4), (2, 3), (2, 5), (3, 4), (4, 5), (5, 6)],
        "5-cycle 0-1-4-3-2, vertex 5 joined to 2 and 4, pendant 6; no green component arises"),
    "one-green/spanning": (13, [(0, 2), (0, 5), (0, 6), (0, 11), (1, 6), (1, 8), (1, 9), (3, 4), (3, 6), (3, 9), (3, 10), (4, 11), (5, 9), (6, 12), (7, 8), (7, 9), (7, 10), (8, 11), (8, 12), (9, 11), (9, 12)],
        "after removing the critical vertices the last green component and the near set form the whole piece"),
    "one-green/outside": (8, [(0, 1), (0, 3), (0, 4), (1, 2), (1, 5), (2, 3), (2, 6), (4, 6), (4, 7)],
        "one green component plus a second far component reached from the near set"),
    "several-green": (11, [(0, 1), (0, 2), (0, 3), (0, 8), (1, 5), (1, 10), (2, 9), (4, 10), (5, 7), (5, 8), (6, 8), (6, 10), (8, 9)],
        "two green components, each properly contacted on one side"),
    "two-sided-green": (9, [(0, 7), (1, 5), (1, 6), (1, 7), (2, 4), (2, 6), (2, 8), (3, 4), (3, 6), (4, 7)],
        "a green component properly contacted on both sides"),
    "shared-contact": (10, [(0, 3), (0, 5), (0, 8), (1, 6), (1, 8), (2, 3), (2, 7), (3, 6), (4, 8), (5, 6), (5, 9)],
        "a near vertex properly contacts two green components"),
    "lone-nail": (7, [(0, 1), (0, 2), (1, 4), (2, 3), (3, 4), (3, 5), (5, 6)],
        "5-cycle 0-1-4-3-2 with a pendant path; some pivot sees a 5-cycle with a single near vertex"),
    "odd-far-part": (8, [(0, 1), (0, 6), (1, 5), (2, 3), (3, 7), (4, 5), (4, 6), (4, 7)],
        "5-cycle 0-1-5-4-6 with the path 4-7-3-2 hanging off it; some far set holds the odd cycle"),
}

CASE_LABELS = tuple(_TARGETED)


def targeted_case_instance(label: str) -> TargetedInstance:
    """A small in-class graph whose solve passes through case ``label`` (weights vary by vertex)."""
    if label not in _TARGETED:
        raise KeyError(f"no targeted instance for {label!r}; known: {', '.join(CASE_LABELS)}")
    n, edges, note = _TARGETED[label]
    weights = [(7 * v) % 10 + 1 for v in range(n)]
    return TargetedInstance(label, WeightedGraph.from_edges(n, edges, weights), note)
