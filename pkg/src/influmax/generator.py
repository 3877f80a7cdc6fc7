"""Random instance generation for tests, verification runs, and benchmarks."""
from __future__ import annotations

import random

from .graph import Graph, GraphClass


def _prufer_tree(n: int, rng: random.Random) -> Graph:
    """Uniformly random labeled tree via a random Prufer sequence."""
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    # smallest-leaf decoding; a heap would be asymptotically nicer but the
    # corpus sizes here never warrant it
    import heapq
    leaves = [u for u in range(n) if degree[u] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def generate(graph_class: GraphClass, n: int, threshold_policy,
             rng_seed: int) -> tuple[Graph, tuple[int, ...]]:
    """Deterministically generate a graph plus thresholds.

    ``threshold_policy`` is either the string "uniform" (per-node uniform
    in [0, degree + 1]), "const:K", or an explicit sequence of ints.
    Thresholds are normalized to at most degree + 1.  The caller attaches
    lambda and beta to make a full Instance.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(rng_seed)
    if graph_class == GraphClass.PATH:
        graph = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    elif graph_class == GraphClass.CYCLE:
        if n < 3:
            raise ValueError("cycles need n >= 3")
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
        graph = Graph.from_edges(n, edges)
    elif graph_class == GraphClass.COMPLETE:
        graph = Graph.complete(n)
    elif graph_class == GraphClass.TREE:
        graph = _prufer_tree(n, rng)
    else:
        raise ValueError(f"cannot generate class {graph_class.value}")

    if isinstance(threshold_policy, str):
        if threshold_policy == "uniform":
            thresholds = tuple(rng.randint(0, graph.degree(u) + 1)
                               for u in range(n))
        elif threshold_policy.startswith("const:"):
            k = int(threshold_policy.split(":", 1)[1])
            if k < 0:
                raise ValueError("constant threshold must be non-negative")
            thresholds = tuple(min(k, graph.degree(u) + 1) for u in range(n))
        else:
            raise ValueError(f"unknown threshold policy {threshold_policy!r}")
    else:
        thresholds = tuple(int(t) for t in threshold_policy)
        if len(thresholds) != n:
            raise ValueError(f"thresholds: expected {n} entries, "
                             f"got {len(thresholds)}")
        thresholds = tuple(min(t, graph.degree(u) + 1)
                           for u, t in enumerate(thresholds))
    return graph, thresholds
