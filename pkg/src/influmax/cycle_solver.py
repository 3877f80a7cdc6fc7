"""Exact cycle solver by reduction to path problems.

Three mutually exclusive routes after normalization (thresholds in 0..3):

* some zero-threshold node exists: cut the ring at one zero.  The zero
  activates on its own and relays at least as fast as anything routed
  through it, so removing it and exposing both of its neighbors to a
  copy of it is lossless.  Seeding the zero itself (one budget unit that
  speeds up both of its chains by a round) stays available because the
  two copies are boosted as a single tied option.

* zero-free with a node v of threshold >= 2: either v is seeded, in
  which case v plus the threshold-1 chains it ignites are removed and
  the rest is a path with budget beta - 1, or v is unseeded, in which
  case the ring minus v is a path; a degree-2 node with threshold 2
  can still flip as a pure +1 when both path ends are active a round
  before the deadline, which the path tables track exactly.

* all thresholds exactly 1: every seed covers a window of 2*lam + 1
  consecutive nodes and disjoint windows are optimal, so the value is
  the closed form min(n, beta * (2*lam + 1)).
"""
from __future__ import annotations

from .graph import GraphClass, classify, cycle_order
from .instance import Instance, Solution, normalize_thresholds
from .path_solver import _SegDp, solve_path_positions

NEG = float("-inf")


def _zero_cut(ring, th, lam, B):
    """Cut at the smallest-id zero; returns (value, seed node ids)."""
    n = len(ring)
    zpos = min((p for p in range(n) if th[p] == 0), key=lambda p: ring[p])
    ring = ring[zpos:] + ring[:zpos]
    th = th[zpos:] + th[:zpos]
    z = ring[0]
    cut_th = [0] + th[1:] + [0]

    def remap(positions, boosted):
        seeds = {z} if boosted else set()
        for p in positions:
            if p == 0 or p == n:
                seeds.add(z)
            else:
                seeds.add(ring[p])
        return seeds

    value, positions, _ = solve_path_positions(cut_th, lam, B,
                                               tied_ends=True)
    value -= 1  # the cut node appears at both ends of the working path
    boosted = 0 in positions or n in positions
    return value, remap(positions, boosted)


def _pivot_seeded(ring, th, lam, B):
    """Pivot at position 0 seeded: strip its chains, solve the rest."""
    n = len(ring)
    removed = {0}
    pos = 1
    while pos <= n - 1 and pos <= lam and th[pos] == 1:
        removed.add(pos)
        pos += 1
    right_stop = pos
    rdec = right_stop <= n - 1 and right_stop <= lam
    pos, k = n - 1, 1
    while pos >= 1 and pos not in removed and k <= lam and th[pos] == 1:
        removed.add(pos)
        pos -= 1
        k += 1
    left_stop = pos
    ldec = (left_stop >= 1 and left_stop not in removed and k <= lam)
    if len(removed) == n:
        return n, {ring[0]}
    rest = list(th[right_stop:left_stop + 1])
    if rdec:
        rest[0] -= 1
    if ldec:
        rest[-1] -= 1
    value, positions, _ = solve_path_positions(rest, lam, max(B - 1, 0))
    seeds = {ring[0]}
    for p in positions:
        seeds.add(ring[right_stop + p])
    return len(removed) + value, seeds


def _pivot_unseeded(ring, th, lam, B):
    """Pivot at position 0 unseeded: ring minus pivot is a path."""
    n = len(ring)
    rest = th[1:]
    value, positions, _ = solve_path_positions(rest, lam, B)
    seeds = {ring[1 + p] for p in positions}
    best = (value, seeds)
    if th[0] == 2 and lam >= 1 and B >= 1:
        # the pivot flips iff both path ends are active by round lam - 1
        dp = _SegDp(rest, lam, min(B, n - 1), left_early=True, tight=True)
        bonus = dp.values_both_ends_early()[min(B, n - 1)]
        if bonus != NEG and 1 + int(bonus) > best[0]:
            inner = dp.backtrack_both_ends_early(min(B, n - 1))
            best = (1 + int(bonus), {ring[i] for i in inner})
    return best


def solve_cycle(instance: Instance, pivot=None) -> Solution:
    """Optimal seed set on a cycle.

    ``pivot`` overrides the default smallest-id choice of the threshold
    >= 2 node used by the zero-free reduction (exercised by tests).
    """
    cls = classify(instance.graph)
    if cls != GraphClass.CYCLE:
        raise ValueError(f"cycle solver needs a cycle, got {cls.value}")
    inst = normalize_thresholds(instance)
    n = inst.graph.n
    B = min(inst.beta, n)
    lam = inst.lam
    if lam == 0:
        seeds = tuple(range(B))
        return Solution(seeds=seeds, influenced_count=B, solver="cycle")
    ring = cycle_order(inst.graph)
    th = [inst.thresholds[u] for u in ring]

    if any(t == 0 for t in th):
        value, seeds = _zero_cut(ring, th, lam, B)
        return Solution(seeds=tuple(sorted(seeds)), influenced_count=value,
                        solver="cycle")

    if any(t >= 2 for t in th):
        if pivot is None:
            pivot = min(ring[p] for p in range(n) if th[p] >= 2)
        ppos = ring.index(pivot)
        if inst.thresholds[pivot] < 2:
            raise ValueError("pivot must have threshold at least 2")
        ring = ring[ppos:] + ring[:ppos]
        th = th[ppos:] + th[:ppos]
        value, seeds = _pivot_unseeded(ring, th, lam, B)
        if B >= 1:
            v_a, s_a = _pivot_seeded(ring, th, lam, B)
            if v_a > value:
                value, seeds = v_a, s_a
        return Solution(seeds=tuple(sorted(seeds)), influenced_count=value,
                        solver="cycle")

    # all thresholds exactly one
    if B == 0:
        return Solution(seeds=(), influenced_count=0, solver="cycle")
    window = 2 * lam + 1
    value = min(n, B * window)
    count = min(B, -(-n // window))
    seeds = tuple(sorted(ring[(i * window) % n] for i in range(count)))
    return Solution(seeds=seeds, influenced_count=value, solver="cycle")
