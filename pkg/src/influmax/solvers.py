"""Solver dispatch shared by the CLI and tests."""
from __future__ import annotations

from .complete_solver import is_complete, solve_complete
from .cycle_solver import solve_cycle
from .graph import GraphClass, classify
from .instance import Instance, Solution
from .oracle import solve_bruteforce
from .path_solver import solve_path
from .tree_solver import solve_tree


class GraphClassError(ValueError):
    """The chosen solver cannot handle the instance's graph class."""


_BY_CLASS = {
    GraphClass.PATH: ("path", solve_path),
    GraphClass.CYCLE: ("cycle", solve_cycle),
    GraphClass.COMPLETE: ("complete", solve_complete),
    GraphClass.TREE: ("tree", solve_tree),
}

_ACCEPTS = {
    "tree": (GraphClass.TREE, GraphClass.PATH),
    "path": (GraphClass.PATH,),
    "cycle": (GraphClass.CYCLE,),
    "complete": (GraphClass.COMPLETE,),
}

SOLVER_NAMES = ("auto", "tree", "path", "cycle", "complete", "bruteforce")


def solve(instance: Instance, solver: str = "auto") -> Solution:
    """Run the requested solver, or dispatch on the detected graph class."""
    if solver == "bruteforce":
        return solve_bruteforce(instance)
    cls = classify(instance.graph)
    if solver == "auto":
        if cls == GraphClass.UNSUPPORTED:
            raise GraphClassError(
                "no exact solver for this graph class (detected: "
                "unsupported); use --solver bruteforce on small instances")
        return _BY_CLASS[cls][1](instance)
    if solver not in _ACCEPTS:
        raise ValueError(f"unknown solver {solver!r}")
    acceptable = cls in _ACCEPTS[solver]
    if solver == "complete":
        # precedence tags K1..K3 as path/cycle; structure is what matters
        acceptable = is_complete(instance.graph)
    if not acceptable:
        raise GraphClassError(
            f"solver {solver!r} cannot handle this instance "
            f"(detected class: {cls.value})")
    return {"tree": solve_tree, "path": solve_path, "cycle": solve_cycle,
            "complete": solve_complete}[solver](instance)
