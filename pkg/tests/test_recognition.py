import random
from itertools import combinations

import pytest

from s124mwis.generator import c5_blowup, groetzsch_edges, petersen_edges
from s124mwis.graph import WeightedGraph, vset
from s124mwis.recognition import (
    ForbiddenWitness,
    check_class,
    classify_c5,
    enumerate_induced_c5,
    find_induced_c5,
    find_induced_s124,
    find_triangle,
    verify_witness,
)

from helpers import complete, cycle, path, random_graph, s124


def _edges_in(g, vs):
    return [(u, v) for u, v in combinations(vs, 2) if g.has_edge(u, v)]


def brute_triangles(g):
    return [t for t in combinations(range(g.n), 3) if len(_edges_in(g, t)) == 3]


def brute_c5s(g):
    out = []
    for s in combinations(range(g.n), 5):
        es = _edges_in(g, s)
        if len(es) == 5 and all(sum(x in e for e in es) == 2 for x in s):
            seen, stack = {s[0]}, [s[0]]
            while stack:
                x = stack.pop()
                for u, v in es:
                    for a, b in ((u, v), (v, u)):
                        if a == x and b not in seen:
                            seen.add(b)
                            stack.append(b)
            if len(seen) == 5:
                out.append(frozenset(s))
    return out


def brute_has_s124(g):
    for s in combinations(range(g.n), 8):
        es = _edges_in(g, s)
        if len(es) != 7:
            continue
        deg = {x: sum(x in e for e in es) for x in s}
        if sorted(deg.values()) != [1, 1, 1, 2, 2, 2, 2, 3]:
            continue
        center = next(x for x in s if deg[x] == 3)
        legs = []
        for u, v in es:
            if center not in (u, v):
                continue
            prev, cur, length = center, v if u == center else u, 1
            while deg[cur] == 2:
                nxt = [b if a == cur else a for a, b in es if cur in (a, b) and prev not in (a, b)]
                prev, cur, length = cur, nxt[0], length + 1
            legs.append(length)
        if sorted(legs) == [1, 2, 4]:
            return True
    return False


def test_triangle_examples():
    assert find_triangle(complete(3)).vertices == (0, 1, 2)
    assert find_triangle(cycle(5)) is None
    assert find_triangle(WeightedGraph.from_edges(*petersen_edges())) is None


def test_c5_examples():
    c5 = find_induced_c5(cycle(5))
    assert c5 is not None and set(c5.vertices) == set(range(5))
    assert find_induced_c5(cycle(4)) is None
    gz = WeightedGraph.from_edges(*groetzsch_edges())
    assert find_induced_c5(gz) is not None and brute_c5s(gz)
    assert len(enumerate_induced_c5(cycle(5))) == 1
    assert enumerate_induced_c5(cycle(6)) == []
    doubled = c5_blowup((2, 1, 1, 1, 1))
    assert len(enumerate_induced_c5(doubled)) == len(brute_c5s(doubled)) == 2


def test_s124_examples():
    w = find_induced_s124(s124())
    assert w is not None and set(w.vertices) == set(range(8)) and verify_witness(s124(), w)
    assert find_induced_s124(path(7)) is None
    assert find_induced_s124(cycle(8)) is None


def test_check_class_examples():
    assert check_class(cycle(5)) is None
    w = check_class(complete(3))
    assert w.kind == "Triangle"
    gz = WeightedGraph.from_edges(*groetzsch_edges())
    # recorded fixture: the Groetzsch graph is triangle-free and S124-free
    assert check_class(gz) is None
    assert not brute_triangles(gz) and not brute_has_s124(gz)


def test_classify_c5():
    c5 = ForbiddenWitness("C5", (0, 1, 2, 3, 4))
    assert classify_c5(c5, vset([4])) == (1, 4)
    assert classify_c5(c5, vset([0, 2])) == (2, None)
    assert classify_c5(c5, 0) == (None, None)


def test_verify_witness_rejects_wrong_pattern():
    assert not verify_witness(cycle(5), ForbiddenWitness("C5", (0, 1, 2, 4, 3)))
    assert not verify_witness(path(8), ForbiddenWitness("S124", tuple(range(8))))


@pytest.mark.parametrize("seed", range(4))
def test_searches_agree_with_subset_enumeration(seed):
    rng = random.Random(seed)
    hits = 0
    for _ in range(25):
        n = rng.randint(5, 11)
        g = random_graph(rng, n, rng.choice([0.15, 0.25, 0.4]))
        tri = find_triangle(g)
        assert (tri is None) == (not brute_triangles(g))
        if tri:
            assert verify_witness(g, tri)
        c5s = enumerate_induced_c5(g)
        assert {frozenset(c.vertices) for c in c5s} == set(brute_c5s(g))
        assert len(c5s) == len({frozenset(c.vertices) for c in c5s})
        assert all(verify_witness(g, c) for c in c5s)
        s = find_induced_s124(g)
        assert (s is None) == (not brute_has_s124(g))
        if s:
            hits += 1
            assert verify_witness(g, s)
    assert hits > 0


def test_witnesses_are_deterministic():
    rng = random.Random(9)
    g = random_graph(rng, 12, 0.3)
    assert find_induced_s124(g) == find_induced_s124(g)
    assert enumerate_induced_c5(g) == enumerate_induced_c5(g)
