import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from graph.graph import Edge, Graph, canonical_edge, make_graph

# Euclidean distances are rounded up to a multiple of 1/EUCLIDEAN_SCALE; rounding
# up keeps the triangle inequality exact.
EUCLIDEAN_SCALE = 10**6


@dataclass(frozen=True)
class WeightedGraph:
    """A simple graph with one exact rational weight per edge, aligned with ``base.edges``."""

    base: Graph
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        self.base.require_simple()
        if len(self.weights) != self.base.edge_count:
            raise ValueError(f"{self.base.edge_count} edges but {len(self.weights)} weights")
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))

    @property
    def n(self) -> int:
        return self.base.n

    @cached_property
    def weight_map(self) -> dict[Edge, Fraction]:
        return dict(zip(self.base.edges, self.weights))

    def weight(self, u: int, v: int) -> Fraction:
        try:
            return self.weight_map[canonical_edge(u, v)]
        except KeyError:
            raise ValueError(f"no edge between {u} and {v}")

    def weighted_edges(self) -> list[tuple[int, int, Fraction]]:
        return [(u, v, w) for (u, v), w in zip(self.base.edges, self.weights)]

    def is_complete(self) -> bool:
        return self.base.edge_count == self.n * (self.n - 1) // 2

    def total(self, edges: Iterable[Edge]) -> Fraction:
        return sum((self.weight(u, v) for u, v in edges), Fraction(0))


def make_weighted(n: int, weighted_edges: Iterable[tuple[int, int, Fraction | int]]) -> WeightedGraph:
    items = [(canonical_edge(u, v), Fraction(w)) for u, v, w in weighted_edges]
    items.sort(key=lambda item: item[0])
    base = make_graph(n, [edge for edge, _ in items])
    return WeightedGraph(base, tuple(w for _, w in items))


def complete_weighted(n: int, weight) -> WeightedGraph:
    """K_n with weight(u, v) supplied by a callable."""
    return make_weighted(n, [(u, v, weight(u, v)) for u, v in combinations(range(n), 2)])


def euclidean_complete(points: Sequence[tuple[float, float]]) -> WeightedGraph:
    def distance(u: int, v: int) -> Fraction:
        return Fraction(math.ceil(math.dist(points[u], points[v]) * EUCLIDEAN_SCALE), EUCLIDEAN_SCALE)

    return complete_weighted(len(points), distance)
