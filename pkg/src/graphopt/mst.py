import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from errors.errors import Disconnected, SizeCapExceeded
from graph.connectivity import is_connected
from graph.graph import Graph, make_graph
from graph.trees import is_tree
from graphopt.weighted import WeightedGraph

logger = logging.getLogger(__name__)

SPANNING_TREE_ENUMERATION_CAP = 8


class UnionFind:
    def __init__(self, n: int):
        self._parent = list(range(n))
        self._rank = [0] * n

    def root(self, v: int) -> int:
        while self._parent[v] != v:
            self._parent[v] = self._parent[self._parent[v]]
            v = self._parent[v]
        return v

    def join(self, u: int, v: int) -> bool:
        """Merge the classes of u and v; False if they were already one class."""
        ru, rv = self.root(u), self.root(v)
        if ru == rv:
            return False
        if self._rank[ru] < self._rank[rv]:
            ru, rv = rv, ru
        self._parent[rv] = ru
        if self._rank[ru] == self._rank[rv]:
            self._rank[ru] += 1
        return True


@dataclass(frozen=True)
class SpanningTree:
    tree: Graph
    cost: Fraction


def kruskal_mst(W: WeightedGraph) -> SpanningTree:
    """Cheapest edge first, skipping edges that close a cycle; ties by (weight, u, v)."""
    if not is_connected(W.base):
        raise Disconnected("a disconnected graph has no spanning tree")
    classes = UnionFind(W.n)
    chosen = []
    cost = Fraction(0)
    for u, v, w in sorted(W.weighted_edges(), key=lambda e: (e[2], e[0], e[1])):
        if classes.join(u, v):
            chosen.append((u, v))
            cost += w
            if len(chosen) == W.n - 1:
                break
    logger.debug("Kruskal picked %d edges with cost %s", len(chosen), cost)
    return SpanningTree(make_graph(W.n, chosen), cost)


def all_spanning_trees(W: WeightedGraph) -> list[SpanningTree]:
    """Every spanning tree with its cost, by filtering (n-1)-edge subsets."""
    if W.n > SPANNING_TREE_ENUMERATION_CAP:
        raise SizeCapExceeded(f"spanning tree enumeration is capped at n = {SPANNING_TREE_ENUMERATION_CAP}")
    trees = []
    for chosen in combinations(W.base.edges, max(W.n - 1, 0)):
        candidate = make_graph(W.n, chosen)
        if is_tree(candidate):
            trees.append(SpanningTree(candidate, W.total(chosen)))
    return trees
