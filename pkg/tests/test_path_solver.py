import itertools

import pytest

from influmax import GraphClass, Instance, solve_bruteforce, solve_path, \
    solve_tree, spread_count
from influmax.generator import generate
from influmax.path_solver import preprocess_zeros, solve_path_positions

from conftest import path_instance, random_path_instance


def test_examples():
    inst = path_instance((1, 1, 1, 1, 1), 2, 1)
    sol = solve_path(inst)
    assert sol.influenced_count == 5

    inst = path_instance((1, 2, 2, 1), 1, 2)
    sol = solve_path(inst)
    assert sol.influenced_count == 4
    assert spread_count(inst, sol.seeds) == 4

    inst = path_instance((1, 1, 1), 2, 5)   # budget above n
    assert solve_path(inst).influenced_count == 3

    # free region around the zero plus one well-placed seed covers all
    inst = path_instance((1, 0, 1, 1, 1, 1, 1), 2, 1)
    sol = solve_path(inst)
    assert sol.influenced_count == 7
    assert spread_count(inst, sol.seeds) == 7


def test_rejects_non_path():
    g, th = generate(GraphClass.CYCLE, 4, "const:1", 0)
    with pytest.raises(ValueError, match="path solver"):
        solve_path(Instance(g, th, 1, 1))


def test_preprocess_identity_without_zeros():
    prep = preprocess_zeros([1, 2, 1, 3], 2)
    assert prep.auto == 0
    segs = [p for k, p in prep.items if k == "seg"]
    assert len(segs) == 1 and segs[0].th == [1, 2, 1, 3]
    assert not [p for k, p in prep.items if k == "boost"]


def test_preprocess_reduces_timely_boundaries():
    # the zero fires at round 1, so both neighbors see help within 3 rounds
    prep = preprocess_zeros([2, 0, 2], 3)
    assert prep.auto == 1
    segs = [p for k, p in prep.items if k == "seg"]
    assert [s.th for s in segs] == [[1], [1]]


def test_preprocess_respects_round_budget():
    # lam = 1: the zero influences nobody else unless seeded itself
    prep = preprocess_zeros([1, 0, 1], 1)
    assert prep.auto == 1
    segs = [p for k, p in prep.items if k == "seg"]
    assert [s.th for s in segs] == [[1], [1]]
    boosts = [p for k, p in prep.items if k == "boost"]
    assert len(boosts) == 1 and boosts[0].dec_prev and boosts[0].dec_next
    # seeding the zero reaches all three nodes
    inst = path_instance((1, 0, 1), 1, 1)
    sol = solve_path(inst)
    assert sol.influenced_count == 3 and sol.seeds == (1,)


def test_preprocess_partition_accounting(rng):
    for _ in range(60):
        n = rng.randint(1, 14)
        th = [rng.randint(0, 3) for _ in range(n)]
        lam = rng.randint(1, 4)
        prep = preprocess_zeros(th, lam)
        seg_total = sum(len(p.th) for k, p in prep.items if k == "seg")
        assert prep.auto + seg_total == n


def test_exhaustive_small(rng):
    for n in range(1, 5):
        g, _ = generate(GraphClass.PATH, n, "const:1", 0)
        for th in itertools.product(range(4), repeat=n):
            for lam in range(3):
                for beta in range(3):
                    inst = Instance(g, th, lam, beta)
                    want = solve_bruteforce(inst).influenced_count
                    sol = solve_path(inst)
                    assert sol.influenced_count == want, (th, lam, beta)
                    assert spread_count(inst, sol.seeds) == want


def test_oracle_agreement_random(rng):
    for _ in range(250):
        inst = random_path_instance(rng)
        want = solve_bruteforce(inst).influenced_count
        sol = solve_path(inst)
        assert sol.influenced_count == want
        assert spread_count(inst, sol.seeds) == want
        assert len(sol.seeds) <= min(inst.beta, inst.graph.n)


def test_agrees_with_tree_solver(rng):
    for _ in range(150):
        inst = random_path_instance(rng)
        assert solve_path(inst).influenced_count == \
            solve_tree(inst).influenced_count


def test_cell_budget_linear(rng):
    # table work stays within a fixed multiple of n * beta * lambda
    for _ in range(20):
        n = rng.randint(5, 300)
        th = [rng.randint(0, 3) for _ in range(n)]
        lam = rng.randint(1, 6)
        beta = rng.randint(1, 6)
        _, _, cells = solve_path_positions(th, lam, beta)
        assert cells <= 16 * n * (beta + 1) * (lam + 1)
