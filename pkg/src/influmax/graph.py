"""Immutable simple-graph model and graph-class detection."""
from __future__ import annotations

from collections import deque
from enum import Enum


class GraphClass(Enum):
    PATH = "path"
    CYCLE = "cycle"
    TREE = "tree"
    COMPLETE = "complete"
    UNSUPPORTED = "unsupported"


class Graph:
    """Undirected simple graph on nodes 0..n-1 with sorted neighbor lists.

    Complete graphs may be stored implicitly (no adjacency materialized) so
    that very large cliques stay O(n) in memory; ``neighbors`` synthesizes
    the list on demand in that case.
    """

    __slots__ = ("n", "edge_count", "_adj")

    def __init__(self, n: int, adj, edge_count: int):
        self.n = n
        self._adj = adj  # tuple of sorted tuples, or None for implicit K_n
        self.edge_count = edge_count

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph from an edge list, validating simplicity."""
        if n < 1:
            raise ValueError("graph needs at least one node")
        adj = [[] for _ in range(n)]
        seen = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(tuple(sorted(a)) for a in adj), len(seen))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        if n < 1:
            raise ValueError("graph needs at least one node")
        return cls(n, None, n * (n - 1) // 2)

    @property
    def is_implicit_complete(self) -> bool:
        return self._adj is None

    def degree(self, u: int) -> int:
        if self._adj is None:
            return self.n - 1
        return len(self._adj[u])

    def degrees(self) -> list[int]:
        if self._adj is None:
            return [self.n - 1] * self.n
        return [len(a) for a in self._adj]

    def neighbors(self, u: int):
        """Sorted neighbors of u (tuple, or a generated sequence for K_n)."""
        if self._adj is None:
            return tuple(v for v in range(self.n) if v != u)
        return self._adj[u]

    def adjacency(self) -> tuple:
        """Materialized adjacency; avoid on huge implicit cliques."""
        if self._adj is None:
            return tuple(tuple(v for v in range(self.n) if v != u)
                         for u in range(self.n))
        return self._adj

    def edges(self):
        """Iterate edges as (u, v) with u < v."""
        if self._adj is None:
            for u in range(self.n):
                for v in range(u + 1, self.n):
                    yield (u, v)
            return
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def is_connected(self) -> bool:
        if self._adj is None or self.n == 1:
            return True
        seen = bytearray(self.n)
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v in self._adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    queue.append(v)
        return count == self.n

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        if self.n != other.n or self.edge_count != other.edge_count:
            return False
        if self._adj is None and other._adj is None:
            return True
        return self.adjacency() == other.adjacency()

    def __hash__(self):
        return hash((self.n, self.edge_count, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"


def classify(graph: Graph) -> GraphClass:
    """Classify a graph with precedence Path > Cycle > Complete > Tree.

    The precedence resolves overlaps: a single node or an edge is also a
    complete graph, a triangle is both a cycle and K3.
    """
    n = graph.n
    m = graph.edge_count
    degs = graph.degrees()
    max_deg = max(degs)
    connected = graph.is_connected()
    acyclic = connected and m == n - 1
    if connected and acyclic and max_deg <= 2:
        return GraphClass.PATH
    if connected and all(d == 2 for d in degs):
        return GraphClass.CYCLE
    if all(d == n - 1 for d in degs):
        return GraphClass.COMPLETE
    if connected and acyclic:
        return GraphClass.TREE
    return GraphClass.UNSUPPORTED


def path_order(graph: Graph) -> list[int]:
    """Node ids of a path graph in end-to-end order (deterministic)."""
    n = graph.n
    if n == 1:
        return [0]
    ends = [u for u in range(n) if graph.degree(u) == 1]
    start = min(ends)
    order = [start]
    prev = -1
    cur = start
    while len(order) < n:
        nxt = [v for v in graph.neighbors(cur) if v != prev]
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def cycle_order(graph: Graph, start: int = 0) -> list[int]:
    """Node ids of a cycle graph in ring order starting at ``start``."""
    n = graph.n
    order = [start]
    prev = -1
    cur = start
    while len(order) < n:
        a, b = graph.neighbors(cur)
        nxt = b if a == prev else (a if b == prev else min(a, b))
        prev, cur = cur, nxt
        order.append(cur)
    return order
