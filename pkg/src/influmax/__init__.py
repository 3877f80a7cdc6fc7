"""Exact solvers for budgeted, round-limited threshold influence spread."""

from .complete_solver import solve_complete
from .cycle_solver import solve_cycle
from .diffusion import DiffusionTrace, activation_rounds, simulate, \
    spread_count
from .generator import generate
from .graph import Graph, GraphClass, classify
from .instance import Instance, Solution, normalize_thresholds
from .oracle import OracleSizeError, solve_bruteforce
from .path_solver import solve_path
from .solvers import GraphClassError, solve
from .tree_solver import solve_tree

__version__ = "0.1.0"

__all__ = [
    "DiffusionTrace",
    "Graph",
    "GraphClass",
    "GraphClassError",
    "Instance",
    "OracleSizeError",
    "Solution",
    "activation_rounds",
    "classify",
    "generate",
    "normalize_thresholds",
    "simulate",
    "solve",
    "solve_bruteforce",
    "solve_complete",
    "solve_cycle",
    "solve_path",
    "solve_tree",
    "spread_count",
    "__version__",
]
