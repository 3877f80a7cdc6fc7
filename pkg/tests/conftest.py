"""Shared test helpers: naive reference implementations and builders."""
from __future__ import annotations

import random

import pytest

from influmax import Graph, GraphClass, Instance
from influmax.generator import generate


def naive_rounds(graph: Graph, thresholds, seeds, lam: int):
    """Recompute-everything simulator, kept independent of the package's
    incremental engine on purpose."""
    active = set(seeds)
    out = [set(active)]
    for _ in range(lam):
        nxt = set(active)
        for v in range(graph.n):
            if v in active:
                continue
            cnt = sum(1 for u in graph.neighbors(v) if u in active)
            if cnt >= thresholds[v]:
                nxt.add(v)
        active = nxt
        out.append(set(active))
    return out


def naive_best(instance: Instance):
    """Reference optimum enumerating every seed set of size <= beta."""
    from itertools import combinations
    n = instance.graph.n
    best = -1
    for k in range(min(instance.beta, n) + 1):
        for seeds in combinations(range(n), k):
            rounds = naive_rounds(instance.graph, instance.thresholds,
                                  seeds, instance.lam)
            best = max(best, len(rounds[-1]))
    return best


def path_instance(th, lam, beta) -> Instance:
    n = len(th)
    g, _ = generate(GraphClass.PATH, n, "const:1", 0)
    return Instance(g, tuple(th), lam, beta)


def cycle_instance(th, lam, beta) -> Instance:
    n = len(th)
    g, _ = generate(GraphClass.CYCLE, n, "const:1", 0)
    return Instance(g, tuple(th), lam, beta)


def random_tree_instance(rng: random.Random, max_n=10, max_lambda=4,
                         max_beta=4) -> Instance:
    n = rng.randint(1, max_n)
    g, _ = generate(GraphClass.TREE, n, "const:1", rng.randrange(2 ** 30))
    th = tuple(rng.randint(0, g.degree(u) + 1) for u in range(n))
    return Instance(g, th, rng.randint(0, max_lambda),
                    rng.randint(0, max_beta))


def random_path_instance(rng: random.Random, max_n=12, max_lambda=4,
                         max_beta=4) -> Instance:
    n = rng.randint(1, max_n)
    th = tuple(rng.randint(0, 3) for _ in range(n))
    return path_instance(th, rng.randint(0, max_lambda),
                         rng.randint(0, max_beta))


def random_cycle_instance(rng: random.Random, max_n=12, max_lambda=4,
                          max_beta=4) -> Instance:
    n = rng.randint(3, max_n)
    th = tuple(rng.randint(0, 3) for _ in range(n))
    return cycle_instance(th, rng.randint(0, max_lambda),
                          rng.randint(0, max_beta))


def random_complete_instance(rng: random.Random, max_n=12, max_lambda=4,
                             max_beta=4) -> Instance:
    n = rng.randint(1, max_n)
    g = Graph.complete(n)
    th = tuple(rng.randint(0, n) for _ in range(n))
    return Instance(g, th, rng.randint(0, max_lambda),
                    rng.randint(0, max_beta))


@pytest.fixture
def rng():
    return random.Random(20240817)
