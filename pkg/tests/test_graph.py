import pytest

from influmax import Graph, GraphClass, classify
from influmax.generator import generate
from influmax.graph import cycle_order, path_order


def test_from_edges_validation():
    with pytest.raises(ValueError, match="self-loop"):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError, match="duplicate"):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError, match="out of range"):
        Graph.from_edges(2, [(0, 2)])


def test_adjacency_sorted_and_symmetric():
    g = Graph.from_edges(4, [(2, 0), (3, 1), (1, 0)])
    for u in range(4):
        nbrs = g.neighbors(u)
        assert list(nbrs) == sorted(nbrs)
        for v in nbrs:
            assert u in g.neighbors(v)
    assert g.edge_count == 3


def test_implicit_complete():
    g = Graph.complete(5)
    assert g.degree(2) == 4
    assert list(g.neighbors(2)) == [0, 1, 3, 4]
    assert g.edge_count == 10
    assert g == Graph.from_edges(
        5, [(u, v) for u in range(5) for v in range(u + 1, 5)])


def test_classify_basics():
    p5, _ = generate(GraphClass.PATH, 5, "const:1", 0)
    assert classify(p5) == GraphClass.PATH
    tri, _ = generate(GraphClass.CYCLE, 3, "const:1", 0)
    assert classify(tri) == GraphClass.CYCLE  # precedence over complete
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert classify(star) == GraphClass.TREE
    assert classify(Graph.complete(4)) == GraphClass.COMPLETE
    assert classify(Graph.complete(1)) == GraphClass.PATH
    assert classify(Graph.complete(2)) == GraphClass.PATH
    disconnected = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert classify(disconnected) == GraphClass.UNSUPPORTED
    square_plus = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3),
                                       (0, 2)])
    assert classify(square_plus) == GraphClass.UNSUPPORTED


def test_path_and_cycle_order():
    g, _ = generate(GraphClass.PATH, 6, "const:1", 0)
    order = path_order(g)
    assert order == list(range(6))
    g, _ = generate(GraphClass.CYCLE, 5, "const:1", 0)
    ring = cycle_order(g)
    assert ring[0] == 0 and len(ring) == 5
    for a, b in zip(ring, ring[1:] + ring[:1]):
        assert b in g.neighbors(a)


def test_generate_determinism_and_shapes(rng):
    for cls in (GraphClass.PATH, GraphClass.TREE, GraphClass.CYCLE,
                GraphClass.COMPLETE):
        n = 10 if cls != GraphClass.CYCLE else 9
        a = generate(cls, n, "uniform", 42)
        b = generate(cls, n, "uniform", 42)
        assert a[0] == b[0] and a[1] == b[1]
    g, th = generate(GraphClass.PATH, 1, "const:1", 0)
    assert th == (1,)
    g, th = generate(GraphClass.CYCLE, 3, "const:2", 7)
    assert th == (2, 2, 2)
    for seed in range(25):
        g, _ = generate(GraphClass.TREE, 10, "const:1", seed)
        assert classify(g) in (GraphClass.TREE, GraphClass.PATH)
        assert g.edge_count == 9 and g.is_connected()


def test_generate_errors():
    with pytest.raises(ValueError):
        generate(GraphClass.CYCLE, 2, "const:1", 0)
    with pytest.raises(ValueError):
        generate(GraphClass.PATH, 0, "const:1", 0)
    with pytest.raises(ValueError):
        generate(GraphClass.PATH, 3, "nonsense", 0)


def test_generate_uniform_thresholds_in_range(rng):
    g, th = generate(GraphClass.TREE, 30, "uniform", 5)
    for u in range(30):
        assert 0 <= th[u] <= g.degree(u) + 1
