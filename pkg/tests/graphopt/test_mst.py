import random
from fractions import Fraction

import pytest

from errors.errors import Disconnected, NotSimple, SizeCapExceeded
from graph.graph import make_graph
from graph.trees import is_tree
from graphopt.mst import UnionFind, all_spanning_trees, kruskal_mst
from graphopt.weighted import WeightedGraph, complete_weighted, euclidean_complete, make_weighted


def _random_connected(rng: random.Random, n: int, distinct: bool = False) -> WeightedGraph:
    tree = {(rng.randrange(v), v) for v in range(1, n)}
    extra = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4}
    edges = sorted(tree | extra)
    if distinct:
        weights = [Fraction(w) for w in rng.sample(range(1, 100), len(edges))]
    else:
        weights = [Fraction(rng.randint(1, 12), rng.randint(1, 3)) for _ in edges]
    return make_weighted(n, [(u, v, w) for (u, v), w in zip(edges, weights)])


class TestWeightedGraph:
    def test_weights_follow_canonical_edges(self):
        W = make_weighted(3, [(2, 1, 5), (1, 0, Fraction(1, 2))])
        assert W.base.edges == ((0, 1), (1, 2))
        assert W.weights == (Fraction(1, 2), Fraction(5))
        assert W.weight(2, 1) == 5
        assert W.total([(0, 1), (1, 2)]) == Fraction(11, 2)
        with pytest.raises(ValueError):
            W.weight(0, 2)

    def test_validation(self):
        with pytest.raises(ValueError):
            WeightedGraph(make_graph(2, [(0, 1)]), (1, 2))
        with pytest.raises(NotSimple):
            WeightedGraph(make_graph(2, [(0, 1), (0, 1)], allow_multi=True), (1, 2))

    def test_euclidean_rounds_up(self):
        W = euclidean_complete([(0, 0), (1, 1), (3, 4)])
        assert W.is_complete()
        assert W.weight(0, 2) == 5
        assert W.weight(0, 1) == Fraction(1414214, 10**6)


class TestUnionFind:
    def test_join(self):
        classes = UnionFind(4)
        assert classes.join(0, 1)
        assert classes.join(2, 3)
        assert not classes.join(1, 0)
        assert classes.join(1, 3)
        assert classes.root(0) == classes.root(2)


class TestKruskal:
    def test_small_example(self):
        W = make_weighted(4, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 3), (0, 2, 2)])
        result = kruskal_mst(W)
        assert result.cost == 4
        assert result.tree.edges == ((0, 1), (0, 2), (2, 3))

    def test_equal_weights_on_k4(self):
        W = complete_weighted(4, lambda u, v: 1)
        trees = all_spanning_trees(W)
        assert len(trees) == 16
        assert {t.cost for t in trees} == {3}
        assert kruskal_mst(W).cost == 3

    def test_matches_enumeration(self):
        rng = random.Random(99)
        for _ in range(100):
            W = _random_connected(rng, rng.randint(2, 7))
            result = kruskal_mst(W)
            assert is_tree(result.tree)
            assert set(result.tree.edges) <= set(W.base.edges)
            assert result.cost == W.total(result.tree.edges)
            assert result.cost == min(t.cost for t in all_spanning_trees(W))

    def test_distinct_weights_give_a_unique_tree(self):
        rng = random.Random(7)
        for _ in range(30):
            W = _random_connected(rng, rng.randint(2, 7), distinct=True)
            trees = all_spanning_trees(W)
            cheapest = min(t.cost for t in trees)
            winners = [t for t in trees if t.cost == cheapest]
            assert len(winners) == 1
            assert kruskal_mst(W) == winners[0]

    def test_single_vertex(self):
        result = kruskal_mst(make_weighted(1, []))
        assert result.cost == 0
        assert result.tree.edge_count == 0

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            kruskal_mst(make_weighted(3, [(0, 1, 1)]))

    def test_enumeration_cap(self):
        with pytest.raises(SizeCapExceeded):
            all_spanning_trees(complete_weighted(9, lambda u, v: 1))
