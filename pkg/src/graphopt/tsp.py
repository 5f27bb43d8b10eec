import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Optional, Sequence

from config.config import load_config
from errors.errors import NotComplete, SizeCapExceeded
from graphopt.mst import kruskal_mst
from graphopt.weighted import WeightedGraph
from workers.pool import run_partitioned

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tour:
    """Closed vertex sequence (first == last) with its exact total cost."""

    vertices: tuple[int, ...]
    cost: Fraction

    def visits_all(self, n: int) -> bool:
        return self.vertices[0] == self.vertices[-1] and set(self.vertices) == set(range(n))

    def __str__(self) -> str:
        return " ".join(map(str, self.vertices))


def tour_cost(W: WeightedGraph, vertices: Sequence[int]) -> Fraction:
    return sum((W.weight(u, v) for u, v in zip(vertices, vertices[1:])), Fraction(0))


def _require_complete(W: WeightedGraph) -> None:
    if not W.is_complete():
        raise NotComplete(f"tour search needs a complete graph, got {W.base.edge_count} of {W.n * (W.n - 1) // 2} edges")


def satisfies_triangle_inequality(W: WeightedGraph) -> bool:
    """w(a, c) <= w(a, b) + w(b, c) for every triangle present in the graph."""
    for a, b, c in combinations(range(W.n), 3):
        if not (W.base.has_edge(a, b) and W.base.has_edge(b, c) and W.base.has_edge(a, c)):
            continue
        ab, bc, ac = W.weight(a, b), W.weight(b, c), W.weight(a, c)
        if ab > bc + ac or bc > ab + ac or ac > ab + bc:
            return False
    return True


def _trivial_tour(W: WeightedGraph, start: int) -> Optional[Tour]:
    if W.n == 1:
        return Tour((start, start), Fraction(0))
    if W.n == 2:
        vertices = (start, 1 - start, start)
        return Tour(vertices, tour_cost(W, vertices))
    return None


def tsp_tree_shortcut(W: WeightedGraph, start: int = 0) -> Tour:
    """Walk around a minimum spanning tree and skip vertices already seen.

    The walk is the depth-first preorder of the tree rooted at ``start`` with
    children taken in index order, closed back to ``start``.
    """
    _require_complete(W)
    if not 0 <= start < max(W.n, 1):
        raise ValueError(f"start vertex {start} out of range for n = {W.n}")
    if W.n == 0:
        raise ValueError("a tour needs at least one vertex")
    trivial = _trivial_tour(W, start)
    if trivial is not None:
        return trivial

    tree = kruskal_mst(W).tree
    order = []
    seen = [False] * W.n
    stack = [start]
    while stack:
        v = stack.pop()
        if seen[v]:
            continue
        seen[v] = True
        order.append(v)
        stack.extend(reversed([w for w in tree.neighbors(v) if not seen[w]]))
    order.append(start)
    tour = Tour(tuple(order), tour_cost(W, order))
    logger.debug("Tree shortcut tour from %d costs %s", start, tour.cost)
    return tour


def _best_with_second(W: WeightedGraph, second: int) -> Optional[Tour]:
    # tours 0, second, ..., last, 0 with second < last; each one is the
    # lexicographically smaller of itself and its reversal
    rest = [v for v in range(1, W.n) if v != second]
    best: Optional[Tour] = None
    for middle in permutations(rest):
        if middle[-1] < second:
            continue
        vertices = (0, second, *middle, 0)
        cost = tour_cost(W, vertices)
        if best is None or cost < best.cost:
            best = Tour(vertices, cost)
    return best


def _best_tour_task(job: tuple[WeightedGraph, int]) -> Optional[Tour]:
    W, second = job
    return _best_with_second(W, second)


def _pick_best(candidates: list[Optional[Tour]]) -> Tour:
    found = [tour for tour in candidates if tour is not None]
    return min(found, key=lambda tour: (tour.cost, tour.vertices))


def _check_tour_size(W: WeightedGraph, cap: int | None) -> None:
    _require_complete(W)
    cap = load_config().tour_cap if cap is None else cap
    if W.n > cap:
        raise SizeCapExceeded(f"exhaustive tour search is capped at n = {cap}, got {W.n}")
    if W.n == 0:
        raise ValueError("a tour needs at least one vertex")


def brute_force_tour(W: WeightedGraph, cap: int | None = None) -> Tour:
    """The cheapest Hamiltonian cycle from vertex 0; ties go to the lexicographically smallest."""
    _check_tour_size(W, cap)
    trivial = _trivial_tour(W, 0)
    if trivial is not None:
        return trivial
    logger.debug("Exhaustive tour search over %d vertices", W.n)
    return _pick_best([_best_with_second(W, second) for second in range(1, W.n)])


async def brute_force_tour_parallel(W: WeightedGraph, workers: int | None = None, cap: int | None = None) -> Tour:
    """Same result as brute_force_tour, with the choice of second vertex split across workers."""
    _check_tour_size(W, cap)
    trivial = _trivial_tour(W, 0)
    if trivial is not None:
        return trivial
    workers = load_config().workers if workers is None else workers
    jobs = [(W, second) for second in range(1, W.n)]
    return _pick_best(await run_partitioned(_best_tour_task, jobs, workers))
