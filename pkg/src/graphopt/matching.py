"""Matchings: the greedy maximal matching, augmenting paths, bipartite maximum
matchings and Hall's condition.

Bipartite hosts are described by their left vertex set. When it is not given
it is taken from the BFS 2-coloring (color 0 on the left).
"""

import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from config.config import load_config
from errors.errors import InvalidPath, NotBipartite, SizeCapExceeded
from graph.connectivity import two_coloring
from graph.graph import Edge, Graph, canonical_edge

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]

    @classmethod
    def of(cls, edges: Iterable[Edge]) -> "Matching":
        return cls(frozenset(canonical_edge(u, v) for u, v in edges))

    def __len__(self) -> int:
        return len(self.edges)

    def partner(self) -> dict[int, int]:
        pairs = {}
        for u, v in self.edges:
            pairs[u] = v
            pairs[v] = u
        return pairs

    def covers(self, v: int) -> bool:
        return any(v in edge for edge in self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def is_matching(G: Graph, edges: Iterable[Edge]) -> bool:
    used: set[int] = set()
    for u, v in edges:
        if u == v or not G.has_edge(u, v) or u in used or v in used:
            return False
        used.update((u, v))
    return True


def is_maximal(G: Graph, M: Matching) -> bool:
    """No edge of G can be added to M."""
    covered = M.partner()
    return is_matching(G, M.edges) and not any(
        u != v and u not in covered and v not in covered for u, v in G.edges
    )


def is_perfect(G: Graph, M: Matching) -> bool:
    return is_matching(G, M.edges) and 2 * len(M) == G.n


def greedy_maximal_matching(G: Graph, order: Optional[Sequence[Edge]] = None) -> Matching:
    """Take edges in the given order (default: lexicographic) whenever both ends are free."""
    covered: set[int] = set()
    chosen = []
    for u, v in (G.edges if order is None else order):
        u, v = canonical_edge(u, v)
        if not G.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
        if u != v and u not in covered and v not in covered:
            chosen.append((u, v))
            covered.update((u, v))
    return Matching.of(chosen)


def augment(G: Graph, M: Matching, path: Sequence[int]) -> Matching:
    """Flip the edges of an augmenting path: the result has one more edge than M."""
    if len(path) < 2 or len(path) % 2 != 0:
        raise InvalidPath(f"an augmenting path has an odd number of edges, got {len(path) - 1}")
    if len(set(path)) != len(path):
        raise InvalidPath("an augmenting path may not repeat a vertex")
    covered = M.partner()
    if path[0] in covered or path[-1] in covered:
        raise InvalidPath("both ends of an augmenting path must be unmatched")
    path_edges = []
    for i, (u, v) in enumerate(zip(path, path[1:])):
        edge = canonical_edge(u, v)
        if not G.has_edge(u, v):
            raise InvalidPath(f"({u}, {v}) is not an edge of the graph")
        if (edge in M.edges) != (i % 2 == 1):
            raise InvalidPath(f"edge ({u}, {v}) breaks the alternation")
        path_edges.append(edge)
    return Matching(M.edges.symmetric_difference(path_edges))


def bipartition(G: Graph, left: Optional[Iterable[int]] = None) -> frozenset[int]:
    """The left side of G, checked so that every edge crosses it."""
    if left is None:
        coloring = two_coloring(G)
        if not coloring.bipartite:
            raise NotBipartite(f"odd cycle {list(coloring.odd_cycle)}")
        return frozenset(v for v in G.vertices() if coloring.coloring[v] == 0)
    side = frozenset(left)
    for u, v in G.edges:
        if (u in side) == (v in side):
            raise NotBipartite(f"edge ({u}, {v}) does not cross the given left set")
    return side


def find_augmenting_path(G: Graph, left: Iterable[int], M: Matching) -> Optional[list[int]]:
    """Breadth-first search for an augmenting path starting at an unmatched left vertex."""
    side = frozenset(left)
    partner = M.partner()
    parent: dict[int, int] = {}
    roots = [v for v in sorted(side) if v not in partner]
    queue = deque(roots)
    seen = set(roots)
    while queue:
        v = queue.popleft()
        for w in G.neighbors(v):
            if w in seen or partner.get(v) == w:
                continue
            seen.add(w)
            parent[w] = v
            if w not in partner:
                route = [w]
                while route[-1] in parent:
                    route.append(parent[route[-1]])
                return route[::-1]
            mate = partner[w]
            if mate not in seen:
                seen.add(mate)
                parent[mate] = w
                queue.append(mate)
    return None


def maximum_matching_bipartite(
    G: Graph, left: Optional[Iterable[int]] = None, start: Optional[Matching] = None
) -> Matching:
    """Grow a matching along augmenting paths until none is left."""
    side = bipartition(G, left)
    M = start if start is not None else Matching(frozenset())
    if not is_matching(G, M.edges):
        raise ValueError("the starting edge set is not a matching")
    while (route := find_augmenting_path(G, side, M)) is not None:
        M = augment(G, M, route)
    logger.debug("Maximum matching of size %d on %d vertices", len(M), G.n)
    return M


def hall_violator(G: Graph, left: Optional[Iterable[int]] = None, cap: int | None = None) -> Optional[tuple[int, ...]]:
    """A smallest X in the left side with |N(X)| < |X|, or None when Hall's condition holds."""
    side = sorted(bipartition(G, left))
    cap = load_config().hall_cap if cap is None else cap
    if len(side) > cap:
        raise SizeCapExceeded(f"Hall subset scan is capped at {cap} left vertices, got {len(side)}")
    reach = {v: 0 for v in side}
    for v in side:
        for w in G.neighborhood([v]):
            reach[v] |= 1 << w
    for size in range(1, len(side) + 1):
        for subset in combinations(side, size):
            mask = 0
            for v in subset:
                mask |= reach[v]
            if mask.bit_count() < size:
                logger.debug("Hall violator %s reaches only %d vertices", subset, mask.bit_count())
                return subset
    return None
