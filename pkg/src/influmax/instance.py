"""Problem instances and solver output contracts."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph


@dataclass(frozen=True)
class Instance:
    """A threshold-diffusion optimization instance.

    ``lam`` bounds the number of diffusion rounds counted toward the
    objective; ``beta`` bounds the seed-set size.  Both may exceed any
    useful value (solvers clamp internally); negative values are rejected.
    """

    graph: Graph
    thresholds: tuple[int, ...]
    lam: int
    beta: int
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "thresholds", tuple(self.thresholds))
        if len(self.thresholds) != self.graph.n:
            raise ValueError(
                f"thresholds: expected {self.graph.n} entries, "
                f"got {len(self.thresholds)}")
        if any(t < 0 for t in self.thresholds):
            raise ValueError("thresholds must be non-negative")
        if self.lam < 0:
            raise ValueError("lambda must be non-negative")
        if self.beta < 0:
            raise ValueError("beta must be non-negative")


def normalize_thresholds(instance: Instance) -> Instance:
    """Clamp every threshold to degree + 1; higher values are equivalent.

    A node can never see more active neighbors than its degree, so any
    threshold above degree + 1 behaves identically to degree + 1.
    """
    g = instance.graph
    clamped = tuple(min(t, g.degree(u) + 1)
                    for u, t in enumerate(instance.thresholds))
    if clamped == instance.thresholds:
        return instance
    return Instance(g, clamped, instance.lam, instance.beta, instance.name)


@dataclass(frozen=True)
class Solution:
    """Solver output: a seed set and the node count it influences."""

    seeds: tuple[int, ...]
    influenced_count: int
    solver: str
    trace: Optional["DiffusionTrace"] = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "seeds", tuple(sorted(self.seeds)))
