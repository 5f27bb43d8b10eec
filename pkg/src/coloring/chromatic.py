"""Chromatic polynomials by deletion-contraction, with a brute-force counter to check them."""

import logging
from dataclasses import dataclass
from itertools import zip_longest

from config.config import load_config
from errors.errors import SizeCapExceeded
from graph.graph import Edge, Graph

logger = logging.getLogger(__name__)

COLORING_COUNT_CAP = 10**7


@dataclass(frozen=True)
class ChromaticPolynomial:
    """Integer coefficients, lowest degree first."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, k: int) -> int:
        total = 0
        for c in reversed(self.coefficients):
            total = total * k + c
        return total

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.coefficients)) + "]"


def _subtract(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [x - y for x, y in zip_longest(a, b, fillvalue=0)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _contract(edges: frozenset[Edge], u: int, v: int, n: int) -> frozenset[Edge]:
    # merge v into u, shift labels above v down by one; parallel edges collapse
    def relabel(w: int) -> int:
        w = u if w == v else w
        return w - 1 if w > v else w

    merged = set()
    for a, b in edges:
        if {a, b} == {u, v}:
            continue
        a, b = relabel(a), relabel(b)
        merged.add((min(a, b), max(a, b)))
    return frozenset(merged)


type Memo = dict[tuple[int, frozenset[Edge]], tuple[int, ...]]


def _deletion_contraction(n: int, edges: frozenset[Edge], memo: Memo) -> tuple[int, ...]:
    if not edges:
        return (0,) * n + (1,)
    if (n, edges) in memo:
        return memo[n, edges]
    u, v = max(edges)
    deleted = _deletion_contraction(n, edges - {(u, v)}, memo)
    contracted = _deletion_contraction(n - 1, _contract(edges, u, v, n), memo)
    memo[n, edges] = _subtract(deleted, contracted)
    return memo[n, edges]


def chromatic_polynomial(G: Graph, cap: int | None = None) -> ChromaticPolynomial:
    """p_G = p_{G - e} - p_{G / e}, down to edgeless graphs where p = x^n."""
    G.require_simple()
    cap = load_config().deletion_cap if cap is None else cap
    if G.edge_count > cap:
        raise SizeCapExceeded(f"deletion-contraction is capped at {cap} edges, got {G.edge_count}")
    memo: Memo = {}
    coefficients = _deletion_contraction(G.n, frozenset(G.edges), memo)
    logger.debug("Chromatic polynomial of degree %d from %d subproblems", G.n, len(memo))
    return ChromaticPolynomial(coefficients)


def count_colorings(G: Graph, k: int) -> int:
    """Assignments of colors 0..k-1 with no monochromatic edge, by exhaustive search."""
    G.require_simple()
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if k**G.n > COLORING_COUNT_CAP:
        raise SizeCapExceeded(f"{k}^{G.n} assignments exceed {COLORING_COUNT_CAP}")
    earlier = [[w for w in G.neighbors(v) if w < v] for v in G.vertices()]
    colors = [0] * G.n

    def extend(v: int) -> int:
        if v == G.n:
            return 1
        total = 0
        for c in range(k):
            if all(colors[w] != c for w in earlier[v]):
                colors[v] = c
                total += extend(v + 1)
        return total

    return extend(0)
