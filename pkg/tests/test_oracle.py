import pytest

from influmax import Graph, GraphClass, Instance, OracleSizeError, \
    solve_bruteforce
from influmax.generator import generate

from conftest import naive_best, random_tree_instance


def test_single_node():
    g = Graph.from_edges(1, [])
    sol = solve_bruteforce(Instance(g, (1,), 0, 1))
    assert sol.seeds == (0,) and sol.influenced_count == 1


def test_p4_example():
    g, _ = generate(GraphClass.PATH, 4, "const:1", 0)
    sol = solve_bruteforce(Instance(g, (1, 2, 2, 1), 1, 2))
    assert sol.influenced_count == 4
    # lexicographic tie-break: (0, 2) also reaches 4 and sorts first
    assert sol.seeds == (0, 2)


def test_zero_budget_no_zero_thresholds():
    g, _ = generate(GraphClass.PATH, 5, "const:1", 0)
    sol = solve_bruteforce(Instance(g, (1, 1, 1, 1, 1), 3, 0))
    assert sol.seeds == () and sol.influenced_count == 0


def test_size_guard():
    g, th = generate(GraphClass.PATH, 21, "const:1", 0)
    with pytest.raises(OracleSizeError, match="oracle size exceeded"):
        solve_bruteforce(Instance(g, th, 1, 1))
    solve_bruteforce(Instance(g, th, 1, 1), size_limit=21)


def test_matches_exhaustive_subset_enumeration(rng):
    for _ in range(40):
        inst = random_tree_instance(rng, max_n=7, max_lambda=3, max_beta=3)
        got = solve_bruteforce(inst)
        assert got.influenced_count == naive_best(inst)


def test_monotone_in_budget_and_rounds(rng):
    for _ in range(20):
        inst = random_tree_instance(rng, max_n=7, max_lambda=0, max_beta=0)
        g, th = inst.graph, inst.thresholds
        prev = -1
        for beta in range(5):
            v = solve_bruteforce(Instance(g, th, 2, beta)).influenced_count
            assert v >= prev
            prev = v
        prev = -1
        for lam in range(5):
            v = solve_bruteforce(Instance(g, th, lam, 2)).influenced_count
            assert v >= prev
            prev = v


def test_full_budget_reaches_everything(rng):
    for _ in range(15):
        inst = random_tree_instance(rng, max_n=6)
        n = inst.graph.n
        full = Instance(inst.graph, inst.thresholds, 0, n + 3)
        sol = solve_bruteforce(full)
        assert sol.influenced_count == n
        assert len(sol.seeds) == n
