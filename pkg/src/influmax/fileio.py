"""Instance files: a small self-describing JSON document.

Keys: n, edges (0-based pairs), thresholds, lambda, beta, optional name.
Key order never matters; the writer emits a canonical form so identical
instances serialize byte-identically.
"""
from __future__ import annotations

import json

from .graph import Graph
from .instance import Instance


class InstanceFormatError(ValueError):
    """Parse failure; the message names the offending field."""


def _expect(cond: bool, message: str):
    if not cond:
        raise InstanceFormatError(message)


def _is_int(x) -> bool:
    # bool is an int subclass; JSON true/false must not pass as numbers
    return isinstance(x, int) and not isinstance(x, bool)


def loads(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"document: invalid JSON ({exc})") from exc
    _expect(isinstance(doc, dict), "document: expected a JSON object")
    for key in ("n", "edges", "thresholds", "lambda", "beta"):
        _expect(key in doc, f"{key}: missing")
    n = doc["n"]
    _expect(_is_int(n) and n >= 1, "n: expected a positive integer")
    edges = doc["edges"]
    _expect(isinstance(edges, list), "edges: expected a list of pairs")
    pairs = []
    for idx, e in enumerate(edges):
        _expect(isinstance(e, list) and len(e) == 2
                and all(_is_int(x) for x in e),
                f"edges[{idx}]: expected a pair of integers")
        pairs.append((e[0], e[1]))
    thresholds = doc["thresholds"]
    _expect(isinstance(thresholds, list)
            and all(_is_int(t) for t in thresholds),
            "thresholds: expected a list of integers")
    _expect(len(thresholds) == n,
            f"thresholds: expected {n} entries, got {len(thresholds)}")
    _expect(all(t >= 0 for t in thresholds),
            "thresholds: entries must be non-negative")
    lam = doc["lambda"]
    _expect(_is_int(lam) and lam >= 0,
            "lambda: expected a non-negative integer")
    beta = doc["beta"]
    _expect(_is_int(beta) and beta >= 0,
            "beta: expected a non-negative integer")
    name = doc.get("name", "")
    _expect(isinstance(name, str), "name: expected a string")
    try:
        graph = Graph.from_edges(n, pairs)
    except ValueError as exc:
        raise InstanceFormatError(f"edges: {exc}") from exc
    return Instance(graph, tuple(thresholds), lam, beta, name)


def dumps(instance: Instance) -> str:
    doc = {
        "n": instance.graph.n,
        "edges": [[u, v] for u, v in instance.graph.edges()],
        "thresholds": list(instance.thresholds),
        "lambda": instance.lam,
        "beta": instance.beta,
    }
    if instance.name:
        doc["name"] = instance.name
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dump(instance: Instance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(instance))
