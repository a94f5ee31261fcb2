import random

import pytest

from s124mwis.errors import ClassViolation, ContextViolation
from s124mwis.generator import (
    CASE_LABELS,
    c5_blowup,
    groetzsch_edges,
    grown_class_graph,
    random_class_graph,
    targeted_case_instance,
)
from s124mwis.graph import (
    Bipartition,
    OddCycle,
    WeightedGraph,
    anti_neighborhood,
    bipartition,
    connected_components,
    is_independent,
    members,
    set_weight,
    vset,
)
from s124mwis.oracle import enumerate_maximal_is, oracle_mwis, verify_cover
from s124mwis.recognition import enumerate_induced_c5, find_induced_c5, verify_witness
from s124mwis.solver import (
    PROPER_SIDE1,
    ComponentContext,
    GreenInfo,
    HALF_SIDE1,
    Solver,
    p4_blockers,
    doubly_contacts,
    eliminate_sequence,
    elimination_sets,
    green_info,
    make_context,
    nail_far_set,
    order_by_domination,
    solve,
    solve_component,
    solve_nearly_bipartite,
    lone_nails,
)

from helpers import cycle, path, random_graph


def class_graphs(seed, count, max_n=14):
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(1, max_n)
        if i % 2:
            yield random_class_graph(rng, n, rng.uniform(0.05, 0.35))
        else:
            yield grown_class_graph(rng, n, rng.uniform(0.2, 0.6)).with_weights([rng.randint(0, 100) for _ in range(n)])


def contexts(g):
    """Every top-level (pivot, component) context of ``g`` reachable from a neighbour of the pivot."""
    for v in range(g.n):
        reach = 0
        for x in members(g.adj[v]):
            reach |= g.adj[x]
        for piece in connected_components(g, anti_neighborhood(g, v)):
            if piece & (piece - 1) and piece & reach:
                yield make_context(g, v, piece)


# ---------------------------------------------------------------- examples


def test_solve_small_examples():
    assert solve(cycle(5)).weight == 2
    r = solve(cycle(5, [3, 1, 1, 3, 1]))
    assert r.weight == 6 and members(r.solution) == [0, 3]
    assert solve(WeightedGraph.from_edges(0, [])).weight == 0
    assert solve(c5_blowup((2, 1, 1, 1, 1))).weight == 3


def test_groetzsch_matches_oracle():
    g = WeightedGraph.from_edges(*groetzsch_edges())
    assert solve(g).weight == oracle_mwis(g)[0] == 5


def test_nearly_bipartite_examples():
    assert solve_nearly_bipartite(cycle(7)).weight == 3
    tree = WeightedGraph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)], [5, 1, 1, 4, 4, 4, 4])
    from s124mwis.bipartite import mwis_bipartite

    direct = mwis_bipartite(tree, tree.all_vertices, bipartition(tree, tree.all_vertices))
    assert solve_nearly_bipartite(tree).weight == direct.weight


def test_nearly_bipartite_on_c5_free_class_graphs():
    rng = random.Random(12)
    checked = 0
    for _ in range(150):
        n = rng.randint(3, 16)
        g = grown_class_graph(rng, n, 0.45, forbid_c5=True).with_weights([rng.randint(0, 50) for _ in range(n)])
        assert find_induced_c5(g) is None
        for comp in connected_components(g, g.all_vertices):
            assert solve_nearly_bipartite(g, comp).weight == oracle_mwis(g, comp)[0]
            checked += 1
    assert checked >= 150


def test_make_context_examples():
    # pivot 0, anchor 1, piece = path 2-3-4-5
    g = WeightedGraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
    ctx = make_context(g, 0, vset([2, 3, 4, 5]))
    assert (ctx.anchor, members(ctx.near), members(ctx.far)) == (1, [2], [3, 4, 5])
    star = WeightedGraph.from_edges(5, [(0, 1), (1, 2), (1, 3), (1, 4)])
    ctx = make_context(star, 0, vset([2]))
    assert ctx.far == 0
    c5 = cycle(5)
    ctx = make_context(c5, 0, vset([2, 3]))
    assert (ctx.anchor, members(ctx.near), members(ctx.far)) == (1, [2], [3])


def test_solve_component_with_empty_z():
    g = WeightedGraph.from_edges(5, [(0, 1), (1, 2), (1, 3), (1, 4)], [1, 1, 2, 3, 4])
    ctx = ComponentContext(0, 1, vset([2, 3, 4]), vset([2, 3, 4]), 0)
    assert solve_component(g, ctx).weight == 9


# -------------------------------------------------------------- combinators


def test_eliminate_sequence_examples():
    g = path(3)
    calls = []

    class R:
        def __init__(self, w):
            self.weight = w

    def step(s, h):
        calls.append(("step", members(s), h))
        return R(1)

    def tail(s):
        calls.append(("tail", members(s)))
        return R(2)

    assert eliminate_sequence(g, g.all_vertices, [], step, tail).weight == 2
    assert calls == [("tail", [0, 1, 2])]
    calls.clear()
    eliminate_sequence(g, g.all_vertices, [1], step, tail)
    assert calls == [("step", [1], 1), ("tail", [0, 2])]


def test_elimination_sets_cover_every_maximal_set():
    rng = random.Random(4)
    for g in class_graphs(4, 120):
        seq = [v for v in range(g.n) if rng.random() < 0.4]
        rng.shuffle(seq)
        sets = elimination_sets(g, g.all_vertices, seq)
        assert len(sets) == len(seq) + 1
        for s in enumerate_maximal_is(g):
            assert any(s & ~x == 0 for x in sets)


def test_doubly_contacts_examples():
    # triple (x; y z) = (0; 1 2) with edge 1-2, h = 3
    base = [(1, 2)]
    g = WeightedGraph.from_edges(4, base + [(3, 0), (3, 1)])
    assert doubly_contacts(g, 3, (0, 1, 2))
    g = WeightedGraph.from_edges(4, base + [(3, 0), (3, 1), (3, 2)])
    assert not doubly_contacts(g, 3, (0, 1, 2))
    g = WeightedGraph.from_edges(4, base + [(3, 1)])
    assert not doubly_contacts(g, 3, (0, 1, 2))


def test_order_by_domination():
    assert order_by_domination([7], lambda a, b: True) == [7]
    sets = {1: {1, 2, 3}, 2: {1}, 3: {1, 2}}
    assert order_by_domination([2, 3, 1], lambda a, b: sets[a] >= sets[b]) == [1, 3, 2]
    with pytest.raises(ContextViolation):
        order_by_domination([1, 2], lambda a, b: a == b)
    rng = random.Random(0)
    for _ in range(50):
        items = rng.sample(range(30), rng.randint(1, 8))
        rank = {x: rng.randint(0, 3) for x in items}
        order = order_by_domination(items, lambda a, b: rank[a] >= rank[b])
        assert all(rank[order[i]] >= rank[x] for i in range(len(order)) for x in order[i + 1 :])


def _green(bip, contacts, comp=None):
    return GreenInfo(comp if comp is not None else bip.side1 | bip.side2, bip, contacts)


def test_green_info_examples():
    # v=0, d=1; target = edge 3-4 with h=2 adjacent to 3
    g = WeightedGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    (info,) = green_info(g, make_context(g, 0, vset([2, 3, 4])))
    assert list(info.contacts.values()) == [HALF_SIDE1] and not info.green
    # target = P4 3-4-5-6, h=2 adjacent to 3 only: proper contact on the side {3, 5}
    g = WeightedGraph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)])
    (info,) = green_info(g, make_context(g, 0, vset([2, 3, 4, 5, 6])))
    assert info.contacts == {2: PROPER_SIDE1} and info.bip.side1 == vset([3, 5]) and info.green
    # a near vertex without neighbours in target is not listed
    g = WeightedGraph.from_edges(7, [(0, 1), (1, 2), (1, 3), (2, 4), (4, 5), (5, 6), (3, 6)])
    infos = green_info(g, make_context(g, 0, vset([2, 3, 4, 5, 6])))
    assert all(2 in i.contacts or 3 in i.contacts for i in infos)


def test_p4_blockers_examples():
    # target: side1 = {a1=2, a2=4}, side2 = {y=3}; edges a1-y, a2-y. h=5 sees a1 only, h_max=6 sees nothing of these
    g = WeightedGraph.from_edges(8, [(2, 3), (3, 4), (5, 2), (6, 7), (7, 3)])
    target = _green(Bipartition(vset([2, 4]), vset([3, 7])), {})
    assert p4_blockers(g, target, 6, vset([5, 6])) == vset([3])
    # h_max dominating side1 leaves nothing
    g2 = WeightedGraph.from_edges(8, [(2, 3), (3, 4), (5, 2), (6, 2), (6, 4)])
    assert p4_blockers(g2, target, 6, vset([5, 6])) == 0
    # without a second near vertex there is no P4
    assert p4_blockers(g, target, 6, vset([6])) == 0


def test_nail_far_set_examples():
    # 5-cycle h=0, v1=1, v2=2, v3=3, v4=4 with near set {0}
    g = cycle(5)
    assert nail_far_set(g, vset([0]), vset([1, 2, 3, 4]), 0) == vset([2, 3])
    assert nail_far_set(path(5), vset([0]), vset([1, 2, 3, 4]), 0) == 0
    for g in class_graphs(8, 60, max_n=12):
        for ctx in contexts(g):
            for h in members(ctx.near):
                want = 0
                for c in enumerate_induced_c5(g, ctx.far | (1 << h)):
                    if h in c.vertices:
                        want |= vset(v for v in c.vertices if not g.has_edge(v, h) and v != h)
                assert nail_far_set(g, ctx.near, ctx.far, h) == want


# -------------------------------------------------------------- properties


def test_matches_oracle_and_returns_valid_sets():
    for g in class_graphs(21, 400, max_n=16):
        r = solve(g, record_leaves=False)
        assert r.weight == oracle_mwis(g)[0]
        assert is_independent(g, r.solution) and set_weight(g, r.solution) == r.weight


def test_anti_neighbourhood_recursion_is_self_consistent():
    seen = 0
    for g in class_graphs(31, 200, max_n=14):
        if find_induced_c5(g) is None:
            continue
        seen += 1
        best = max(g.weights[v] + solve(g.with_weights([w if anti_neighborhood(g, v) >> u & 1 else 0 for u, w in enumerate(g.weights)]), record_leaves=False).weight for v in range(g.n))
        assert solve(g, record_leaves=False).weight == best
    assert seen >= 20


def test_leaf_family_covers_every_maximal_set():
    for g in class_graphs(41, 200, max_n=14):
        r = solve(g)
        assert r.leaves_complete
        assert verify_cover(g, r.leaves) is None


def test_context_structure_on_class_graphs():
    for g in class_graphs(51, 200, max_n=14):
        for v in range(g.n):
            comps = connected_components(g, anti_neighborhood(g, v))
            assert sum(find_induced_c5(g, c) is not None for c in comps) <= 1
        for ctx in contexts(g):
            assert is_independent(g, ctx.near)
            if ctx.near & ctx.far or ctx.near | ctx.far != ctx.piece:
                pytest.fail("near and far must split the piece")
            zb = bipartition(g, ctx.far)
            if isinstance(zb, OddCycle):
                odd = [c for c in connected_components(g, ctx.far) if isinstance(bipartition(g, c), OddCycle)]
                assert len(odd) == 1
                for h in members(ctx.near):
                    if g.adj[h] & odd[0]:
                        assert not isinstance(bipartition(g, odd[0] & ~g.adj[h]), OddCycle)
            elif not lone_nails(g, ctx.near, ctx.far):
                green_info(g, ctx)  # raises if some h sees both sides of a component


def test_every_context_solves_exactly():
    for g in class_graphs(61, 150, max_n=13):
        for ctx in contexts(g):
            assert solve_component(g, ctx, record_leaves=False).weight == oracle_mwis(g, ctx.piece)[0]


@pytest.mark.parametrize("label", CASE_LABELS)
def test_targeted_instances_reach_their_case(label):
    t = targeted_case_instance(label)
    r = solve(t.graph)
    assert r.stats.branches[label] >= 1
    assert r.weight == oracle_mwis(t.graph)[0]
    assert verify_cover(t.graph, r.leaves) is None


# -------------------------------------------------------------- failures


def test_triangle_gives_class_violation_or_correct_value():
    rng = random.Random(77)
    raised = 0
    for _ in range(150):
        g = random_graph(rng, rng.randint(4, 14), 0.3)
        try:
            r = solve(g, record_leaves=False)
        except ClassViolation as exc:
            raised += 1
            assert verify_witness(g, exc.witness)
            continue
        assert r.weight == oracle_mwis(g)[0]
    assert raised > 0


def test_depth_guard():
    t = targeted_case_instance("several-green")
    with pytest.raises(ContextViolation):
        Solver(t.graph, depth_limit=1).solve()


def test_leaf_recording_can_be_capped():
    t = targeted_case_instance("lone-nail")
    r = Solver(t.graph, max_leaves=1).solve()
    assert not r.leaves_complete and r.leaves == []
    assert r.weight == oracle_mwis(t.graph)[0]
