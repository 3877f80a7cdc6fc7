"""Brute-force reference solver: exhaustive seed-set enumeration.

Intentionally free of cleverness so it can serve as ground truth for the
polynomial solvers.  Diffusion is monotone in the seed set, so enumerating
sets of size exactly min(beta, n) reaches the optimum over all sets of
size at most beta.
"""
from __future__ import annotations

from itertools import combinations

from .diffusion import spread_count
from .instance import Instance, Solution

DEFAULT_SIZE_LIMIT = 20


class OracleSizeError(ValueError):
    """Instance too large for exhaustive enumeration."""


def solve_bruteforce(instance: Instance,
                     size_limit: int = DEFAULT_SIZE_LIMIT) -> Solution:
    """Optimal solution by trying every seed set of size min(beta, n).

    Ties are broken toward the lexicographically smallest seed tuple,
    which ``itertools.combinations`` yields first.
    """
    n = instance.graph.n
    if n > size_limit:
        raise OracleSizeError(
            f"oracle size exceeded: n={n} > limit {size_limit}")
    k = min(instance.beta, n)
    best_count = -1
    best_seeds: tuple[int, ...] = ()
    for seeds in combinations(range(n), k):
        count = spread_count(instance, seeds)
        if count > best_count:
            best_count = count
            best_seeds = seeds
            if best_count == n:
                break
    return Solution(seeds=best_seeds, influenced_count=best_count,
                    solver="bruteforce")
