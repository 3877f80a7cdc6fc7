import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from influmax import (Graph, GraphClass, Instance, normalize_thresholds,
                      simulate, spread_count)
from influmax.generator import generate

from conftest import naive_rounds


def test_simulate_examples():
    g, th = generate(GraphClass.PATH, 5, "const:1", 0)
    inst = Instance(g, th, 3, 5)
    # no activation source
    assert all(len(r) == 0 for r in simulate(inst, []).rounds)
    # lam = 0 keeps exactly the seeds
    inst0 = Instance(g, th, 0, 5)
    tr = simulate(inst0, [1, 3])
    assert tr.rounds == [frozenset({1, 3})]
    # center seed walks outward one hop per round
    inst2 = Instance(g, th, 2, 1)
    tr = simulate(inst2, [2])
    assert [sorted(r) for r in tr.rounds] == [[2], [1, 2, 3], [0, 1, 2, 3, 4]]
    assert tr.influenced_count == 5


def test_simulate_rejects_bad_seed():
    g, th = generate(GraphClass.PATH, 3, "const:1", 0)
    with pytest.raises(ValueError, match="out of range"):
        simulate(Instance(g, th, 1, 1), [3])


def test_trace_shape_contract():
    g, th = generate(GraphClass.PATH, 4, "const:1", 0)
    inst = Instance(g, th, 6, 1)
    tr = simulate(inst, [0])
    rounds = tr.rounds
    assert len(rounds) == 7
    assert rounds[0] == tr.seed_set
    for a, b in zip(rounds, rounds[1:]):
        assert a <= b
    assert len(tr.newly_by_round()) == 7


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_simulate_matches_naive(data):
    n = data.draw(st.integers(1, 7))
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(possible), unique=True)) \
        if possible else []
    g = Graph.from_edges(n, edges)
    th = tuple(data.draw(st.integers(0, g.degree(u) + 2)) for u in range(n))
    lam = data.draw(st.integers(0, 5))
    seeds = data.draw(st.lists(st.integers(0, n - 1), unique=True))
    inst = Instance(g, th, lam, 0)
    got = [set(r) for r in simulate(inst, seeds).rounds]
    want = naive_rounds(g, th, seeds, lam)
    assert got == want


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_seed_monotonicity(data):
    n = data.draw(st.integers(1, 7))
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(possible), unique=True)) \
        if possible else []
    g = Graph.from_edges(n, edges)
    th = tuple(data.draw(st.integers(0, g.degree(u) + 1)) for u in range(n))
    lam = data.draw(st.integers(0, 5))
    small = data.draw(st.lists(st.integers(0, n - 1), unique=True))
    extra = data.draw(st.lists(st.integers(0, n - 1), unique=True))
    inst = Instance(g, th, lam, 0)
    lo = simulate(inst, small).rounds
    hi = simulate(inst, sorted(set(small) | set(extra))).rounds
    for a, b in zip(lo, hi):
        assert a <= b


def test_fixpoint_within_n_rounds(rng):
    for _ in range(30):
        n = rng.randint(1, 9)
        g, _ = generate(GraphClass.TREE, n, "const:1", rng.randrange(10**9))
        th = tuple(rng.randint(0, g.degree(u) + 1) for u in range(n))
        seeds = [u for u in range(n) if rng.random() < 0.3]
        inst = Instance(g, th, n + 1, 0)
        rounds = simulate(inst, seeds).rounds
        assert rounds[n] == rounds[n + 1]


def test_zero_threshold_nodes_join_round_one(rng):
    for _ in range(20):
        n = rng.randint(1, 8)
        g, _ = generate(GraphClass.TREE, n, "const:1", rng.randrange(10**9))
        th = list(rng.randint(0, g.degree(u) + 1) for u in range(n))
        th[rng.randrange(n)] = 0
        inst = Instance(g, tuple(th), rng.randint(1, 4), 0)
        rounds = simulate(inst, []).rounds
        for v in range(n):
            if th[v] == 0:
                assert v in rounds[1]


def test_normalization_neutral_for_simulation(rng):
    for _ in range(30):
        n = rng.randint(1, 8)
        g, _ = generate(GraphClass.TREE, n, "const:1", rng.randrange(10**9))
        th = tuple(rng.randint(0, g.degree(u) + 3) for u in range(n))
        lam = rng.randint(0, 4)
        inst = Instance(g, th, lam, 0)
        norm = normalize_thresholds(inst)
        assert all(t <= g.degree(u) + 1
                   for u, t in enumerate(norm.thresholds))
        seeds = [u for u in range(n) if rng.random() < 0.4]
        assert simulate(inst, seeds).rounds == simulate(norm, seeds).rounds


def test_normalize_examples():
    g = Graph.from_edges(1, [])
    inst = normalize_thresholds(Instance(g, (5,), 1, 1))
    assert inst.thresholds == (1,)
    g, _ = generate(GraphClass.PATH, 3, "const:1", 0)
    inst = normalize_thresholds(Instance(g, (1, 7, 1), 1, 1))
    assert inst.thresholds == (1, 3, 1)
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    inst = normalize_thresholds(Instance(star, (2, 1, 1, 1, 1), 1, 1))
    assert inst.thresholds == (2, 1, 1, 1, 1)


def test_spread_count_matches_trace(rng):
    for _ in range(20):
        n = rng.randint(1, 9)
        g, th = generate(GraphClass.TREE, n, "uniform", rng.randrange(10**9))
        inst = Instance(g, th, rng.randint(0, 4), 0)
        seeds = [u for u in range(n) if rng.random() < 0.3]
        assert spread_count(inst, seeds) == \
            simulate(inst, seeds).influenced_count
