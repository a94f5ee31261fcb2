import random

import pytest

from s124mwis.errors import OracleBudgetExceeded
from s124mwis.graph import is_independent, members, set_weight
from s124mwis.oracle import OracleBudget, check_solution, enumerate_maximal_is, oracle_mwis, subset_mwis, verify_cover

from helpers import complete, cycle, edgeless, path, random_graph


def test_oracle_examples():
    assert oracle_mwis(cycle(5))[0] == 2
    assert oracle_mwis(complete(6))[0] == 1
    assert oracle_mwis(path(7))[0] == 4
    assert oracle_mwis(edgeless(0)) == (0, 0)


def test_budget():
    with pytest.raises(OracleBudgetExceeded):
        oracle_mwis(path(30))
    with pytest.raises(OracleBudgetExceeded):
        oracle_mwis(complete(12), budget=OracleBudget(max_nodes=3))
    with pytest.raises(OracleBudgetExceeded):
        subset_mwis(path(21))


def test_maximal_is_examples():
    assert sorted(members(s) for s in enumerate_maximal_is(cycle(4))) == [[0, 2], [1, 3]]
    assert sorted(members(s) for s in enumerate_maximal_is(complete(3))) == [[0], [1], [2]]
    assert [members(s) for s in enumerate_maximal_is(edgeless(3))] == [[0, 1, 2]]


def test_branch_and_bound_matches_subset_scan():
    rng = random.Random(5)
    for _ in range(300):
        g = random_graph(rng, rng.randint(0, 16), rng.choice([0.1, 0.3, 0.6]))
        w, s = oracle_mwis(g)
        assert w == subset_mwis(g)[0]
        assert check_solution(g, s, w)


def test_maximal_sets_are_independent_maximal_and_distinct():
    rng = random.Random(6)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 12), 0.3)
        sets = enumerate_maximal_is(g)
        assert len(sets) == len(set(sets))
        for s in sets:
            assert is_independent(g, s)
            for v in range(g.n):
                if not s >> v & 1:
                    assert g.adj[v] & s
        # the heaviest maximal set is an optimum
        assert max(set_weight(g, s) for s in sets) == oracle_mwis(g)[0]


def test_verify_cover_examples():
    g = path(4)
    assert verify_cover(g, [g.all_vertices]) is None
    assert verify_cover(g, []).reason == "uncovered"
    assert verify_cover(cycle(5), [cycle(5).all_vertices]).reason == "not-bipartite"
