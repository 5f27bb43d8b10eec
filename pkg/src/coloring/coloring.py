import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from config.config import load_config
from errors.errors import NotSimple, SizeCapExceeded
from graph.graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexColoring:
    """colors[v] is the color index of vertex v."""

    colors: tuple[int, ...]

    @property
    def color_count(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            groups.setdefault(c, []).append(v)
        return [groups[c] for c in sorted(groups)]


def is_proper(G: Graph, coloring: VertexColoring | Sequence[int]) -> bool:
    colors = coloring.colors if isinstance(coloring, VertexColoring) else tuple(coloring)
    if len(colors) != G.n:
        return False
    return all(colors[u] != colors[v] for u, v in G.edges)


def color_count(coloring: VertexColoring) -> int:
    return coloring.color_count


def _require_colorable(G: Graph) -> None:
    # a loop makes a vertex adjacent to itself; parallel edges change nothing
    if any(u == v for u, v in G.edges):
        raise NotSimple("a graph with a loop has no proper coloring")


def is_k_colorable(G: Graph, k: int, cap: int | None = None) -> Optional[VertexColoring]:
    """A proper coloring with colors 0..k-1, or None.

    Backtracking over vertices by descending degree (ties by index), colors
    tried in index order.
    """
    _require_colorable(G)
    cap = load_config().coloring_cap if cap is None else cap
    if G.n > cap:
        raise SizeCapExceeded(f"coloring search is capped at {cap} vertices, got {G.n}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if G.n == 0:
        return VertexColoring(())

    order = sorted(G.vertices(), key=lambda v: (-G.degree(v), v))
    neighbors = [G.neighbors(v) for v in G.vertices()]
    colors = [-1] * G.n

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colors[w] for w in neighbors[v]}
        for c in range(k):
            if c in taken:
                continue
            colors[v] = c
            if place(i + 1):
                return True
        colors[v] = -1
        return False

    return VertexColoring(tuple(colors)) if place(0) else None


def chromatic_number(G: Graph, cap: int | None = None) -> int:
    k = 0 if G.n == 0 else 1
    while is_k_colorable(G, k, cap) is None:
        k += 1
    logger.debug("Chromatic number %d on %d vertices", k, G.n)
    return k


def degeneracy_order(G: Graph) -> tuple[list[int], int]:
    """Elimination sequence that always removes a minimum-degree vertex (ties by index).

    Returns the sequence and the largest degree seen at removal time.
    """
    remaining = set(G.vertices())
    degree = {v: G.degree(v) for v in G.vertices()}
    sequence = []
    worst = 0
    while remaining:
        v = min(remaining, key=lambda u: (degree[u], u))
        worst = max(worst, degree[v])
        sequence.append(v)
        remaining.remove(v)
        for w, _ in G.adjacency[v]:
            if w in remaining:
                degree[w] -= 1
    return sequence, worst


def degeneracy_coloring(G: Graph) -> VertexColoring:
    """Greedy coloring in reverse elimination order; uses at most degeneracy + 1 colors."""
    _require_colorable(G)
    sequence, degeneracy = degeneracy_order(G)
    colors = [-1] * G.n
    for v in reversed(sequence):
        taken = {colors[w] for w in G.neighbors(v)}
        colors[v] = next(c for c in range(len(taken) + 1) if c not in taken)
    coloring = VertexColoring(tuple(colors))
    logger.debug("Degeneracy %d coloring with %d colors", degeneracy, coloring.color_count)
    return coloring


def planar_six_coloring(G: Graph) -> VertexColoring:
    """Degeneracy coloring of a graph that passes the 3v - 6 edge bound."""
    G.require_simple()
    if G.n >= 3 and G.edge_count > 3 * G.n - 6:
        raise ValueError(f"{G.edge_count} edges exceed 3v - 6 = {3 * G.n - 6}; the graph is not planar")
    return degeneracy_coloring(G)
