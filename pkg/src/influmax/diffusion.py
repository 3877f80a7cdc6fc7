"""Deterministic threshold diffusion simulator.

A node becomes active once at least ``threshold`` of its neighbors are
active; seeds are active at round 0 and zero-threshold nodes join at
round 1 unconditionally.  The engine processes only newly activated nodes
each round (incremental neighbor counters), so a full run costs O(n + m).
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .instance import Instance


def activation_rounds(graph: Graph, thresholds, seeds, lam: int) -> list:
    """Per-node activation round within ``lam`` rounds, or None.

    Seeds activate at round 0.  The returned list has an entry for every
    node; entries are in 0..lam.
    """
    n = graph.n
    rounds: list = [None] * n
    frontier = []
    for s in seeds:
        if not (0 <= s < n):
            raise ValueError(f"seed {s} out of range for n={n}")
        if rounds[s] is None:
            rounds[s] = 0
            frontier.append(s)
    if lam == 0:
        return rounds
    counts = [0] * n
    tau = 0
    while frontier and tau < lam:
        tau += 1
        nxt = []
        for u in frontier:
            for v in graph.neighbors(u):
                counts[v] += 1
                if rounds[v] is None and counts[v] >= thresholds[v]:
                    rounds[v] = tau
                    nxt.append(v)
        if tau == 1:
            # zero-threshold nodes need no active neighbor at all
            for v in range(n):
                if rounds[v] is None and thresholds[v] == 0:
                    rounds[v] = 1
                    nxt.append(v)
        frontier = nxt
    if tau == 0 and lam >= 1:
        # no seeds: zero-threshold nodes still ignite at round 1
        frontier = [v for v in range(n) if thresholds[v] == 0]
        for v in frontier:
            rounds[v] = 1
        tau = 1
        while frontier and tau < lam:
            tau += 1
            nxt = []
            for u in frontier:
                for v in graph.neighbors(u):
                    counts[v] += 1
                    if rounds[v] is None and counts[v] >= thresholds[v]:
                        rounds[v] = tau
                        nxt.append(v)
            frontier = nxt
    return rounds


def spread_count(instance: Instance, seeds) -> int:
    """|influenced set after lam rounds| for the given seeds."""
    rounds = activation_rounds(instance.graph, instance.thresholds, seeds,
                               instance.lam)
    return sum(1 for r in rounds if r is not None)


@dataclass(frozen=True)
class DiffusionTrace:
    """Round-by-round activation record.

    ``newly`` holds, per round, the nodes activated at that round (round 0
    entries are the seeds).  It is truncated at the stabilization round;
    the ``rounds`` property re-expands to exactly lam + 1 cumulative sets.
    """

    n: int
    lam: int
    seed_set: frozenset
    newly: tuple  # tuple of sorted tuples, len <= lam + 1

    @property
    def rounds(self) -> list[frozenset]:
        out = []
        cur: frozenset = frozenset()
        for batch in self.newly:
            cur = cur | frozenset(batch)
            out.append(cur)
        while len(out) < self.lam + 1:
            out.append(cur)
        return out

    @property
    def influenced_count(self) -> int:
        return sum(len(batch) for batch in self.newly)

    def newly_by_round(self) -> list[list[int]]:
        """Newly activated nodes per round, padded to lam + 1 entries."""
        out = [list(batch) for batch in self.newly]
        while len(out) < self.lam + 1:
            out.append([])
        return out


def simulate(instance: Instance, seeds) -> DiffusionTrace:
    """Run the diffusion from ``seeds`` for instance.lam rounds."""
    rounds = activation_rounds(instance.graph, instance.thresholds, seeds,
                               instance.lam)
    last = 0
    for r in rounds:
        if r is not None and r > last:
            last = r
    newly = [[] for _ in range(last + 1)]
    for v, r in enumerate(rounds):
        if r is not None:
            newly[r].append(v)
    return DiffusionTrace(
        n=instance.graph.n,
        lam=instance.lam,
        seed_set=frozenset(seeds),
        newly=tuple(tuple(batch) for batch in newly),
    )
