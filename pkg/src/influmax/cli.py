"""Command-line front-end: solve, verify, generate, bench.

Exit codes: 0 success, 2 parse/flag error, 3 graph class mismatch,
4 oracle size guard, 5 verification found mismatches.
"""
from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time

from . import fileio
from .diffusion import simulate
from .generator import generate
from .graph import GraphClass
from .instance import Instance
from .oracle import DEFAULT_SIZE_LIMIT, OracleSizeError, solve_bruteforce
from .solvers import SOLVER_NAMES, GraphClassError, solve

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CLASS = 3
EXIT_ORACLE = 4
EXIT_MISMATCH = 5

_CLASSES = {
    "path": GraphClass.PATH,
    "cycle": GraphClass.CYCLE,
    "tree": GraphClass.TREE,
    "complete": GraphClass.COMPLETE,
}


def _fail(code: int, message: str) -> int:
    print(f"influmax: {message}", file=sys.stderr)
    return code


def cmd_solve(args) -> int:
    try:
        instance = fileio.load(args.instance)
    except OSError as exc:
        return _fail(EXIT_PARSE, f"cannot read {args.instance}: {exc}")
    except fileio.InstanceFormatError as exc:
        return _fail(EXIT_PARSE, str(exc))
    t0 = time.perf_counter()
    try:
        solution = solve(instance, args.solver)
    except GraphClassError as exc:
        return _fail(EXIT_CLASS, str(exc))
    except OracleSizeError as exc:
        return _fail(EXIT_ORACLE, str(exc))
    wall_ms = (time.perf_counter() - t0) * 1000.0
    report = {
        "value": solution.influenced_count,
        "seeds": list(solution.seeds),
        "solver": solution.solver,
        "wall_time_ms": round(wall_ms, 3),
    }
    if args.trace:
        trace = simulate(instance, solution.seeds)
        report["rounds"] = trace.newly_by_round()
    if args.output == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(f"value {report['value']}")
        print(f"seeds {' '.join(map(str, report['seeds'])) or '-'}")
        print(f"solver {report['solver']}")
        print(f"wall_time_ms {report['wall_time_ms']}")
        if args.trace:
            for tau, batch in enumerate(report["rounds"]):
                print(f"round {tau}: {' '.join(map(str, batch)) or '-'}")
    return EXIT_OK


def random_instance(cls: GraphClass, rng: random.Random, max_n: int,
                    max_lambda: int, max_beta: int) -> Instance:
    lo = 3 if cls == GraphClass.CYCLE else 1
    n = rng.randint(lo, max(lo, max_n))
    graph, thresholds = generate(cls, n, "uniform", rng.randrange(2 ** 30))
    return Instance(graph, thresholds, rng.randint(0, max_lambda),
                    rng.randint(0, max_beta))


def cmd_verify(args) -> int:
    cls = _CLASSES[args.graph_class]
    rng = random.Random(args.rng_seed)
    mismatches = 0
    for _ in range(args.count):
        instance = random_instance(cls, rng, args.max_n, args.max_lambda,
                                   args.max_beta)
        got = solve(instance, args.graph_class)
        want = solve_bruteforce(instance)
        if got.influenced_count != want.influenced_count:
            mismatches += 1
            print(f"MISMATCH solver={got.influenced_count} "
                  f"oracle={want.influenced_count} on instance:")
            print(fileio.dumps(instance), end="")
    print(f"{args.count - mismatches}/{args.count} OK"
          + (f", {mismatches} mismatches" if mismatches else ""))
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


def cmd_generate(args) -> int:
    cls = _CLASSES[args.graph_class]
    try:
        graph, thresholds = generate(cls, args.n, args.thresholds,
                                     args.rng_seed)
    except ValueError as exc:
        return _fail(EXIT_PARSE, str(exc))
    instance = Instance(graph, thresholds, args.lam, args.beta)
    text = fileio.dumps(instance)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return EXIT_OK


_SUITES = {
    "path-large": [
        (GraphClass.PATH, 25_000, 20, 20),
        (GraphClass.PATH, 50_000, 20, 20),
        (GraphClass.PATH, 100_000, 20, 20),
    ],
    "tree-large": [
        (GraphClass.TREE, 5_000, 5, 5),
        (GraphClass.TREE, 10_000, 5, 5),
        (GraphClass.TREE, 20_000, 5, 5),
    ],
    "complete-large": [
        (GraphClass.COMPLETE, 250_000, 1_000_000, 1_000),
        (GraphClass.COMPLETE, 500_000, 1_000_000, 1_000),
        (GraphClass.COMPLETE, 1_000_000, 1_000_000, 1_000),
    ],
}


def cmd_bench(args) -> int:
    rows = []
    for cls, n, lam, beta in _SUITES[args.suite]:
        graph, thresholds = generate(cls, n, "uniform", args.rng_seed)
        instance = Instance(graph, thresholds, lam, beta)
        t0 = time.perf_counter()
        solution = solve(instance, "auto")
        dt = time.perf_counter() - t0
        rows.append((n, solution.solver, dt, solution.influenced_count))
        print(f"n={n:>9}  solver={solution.solver:<8}  "
              f"time={dt:8.3f}s  value={solution.influenced_count}")
    ratios = [rows[i + 1][2] / max(rows[i][2], 1e-9)
              for i in range(len(rows) - 1)]
    for (n0, _, _, _), (n1, _, _, _), r in zip(rows, rows[1:], ratios):
        print(f"time ratio {n0} -> {n1}: {r:.2f}")
    if all(r > 0 for r in ratios):
        exponent = sum(math.log2(r) for r in ratios) / len(ratios)
        print(f"fitted growth exponent: {exponent:.2f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="influmax",
        description="Exact solvers for budgeted, round-limited threshold "
                    "influence maximization on special graph classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance file")
    p.add_argument("--instance", required=True)
    p.add_argument("--solver", choices=SOLVER_NAMES, default="auto")
    p.add_argument("--trace", action="store_true",
                   help="include per-round activations in the report")
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify",
                       help="compare a solver against the brute-force "
                            "oracle on random instances")
    p.add_argument("--class", dest="graph_class", required=True,
                   choices=tuple(_CLASSES))
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--max-lambda", type=int, default=4)
    p.add_argument("--max-beta", type=int, default=4)
    p.add_argument("--rng-seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a random instance file")
    p.add_argument("--class", dest="graph_class", required=True,
                   choices=tuple(_CLASSES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--thresholds", default="uniform",
                   help='"uniform" or "const:K"')
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--out", default="")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="run a fixed timing suite")
    p.add_argument("--suite", choices=tuple(_SUITES), required=True)
    p.add_argument("--rng-seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.max_n > DEFAULT_SIZE_LIMIT:
        parser.error(f"--max-n must be at most {DEFAULT_SIZE_LIMIT} "
                     "(oracle size guard)")
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
