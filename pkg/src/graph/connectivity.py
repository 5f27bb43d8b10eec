from dataclasses import dataclass
from typing import Optional

import networkx as nx

from graph.graph import Graph


def connected_components(G: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    return sorted(sorted(component) for component in nx.connected_components(G.multigraph))


def is_connected(G: Graph) -> bool:
    return G.n == 0 or nx.is_connected(G.multigraph)


def is_connected_ignoring_isolated(G: Graph) -> bool:
    """Connected once vertices without edges are discarded."""
    busy = [v for v, d in G.multigraph.degree() if d > 0]
    return not busy or nx.is_connected(G.multigraph.subgraph(busy))


@dataclass(frozen=True)
class TwoColoring:
    """Exactly one of ``coloring`` and ``odd_cycle`` is set."""

    coloring: Optional[tuple[int, ...]] = None
    odd_cycle: Optional[tuple[int, ...]] = None

    @property
    def bipartite(self) -> bool:
        return self.coloring is not None


def two_coloring(G: Graph) -> TwoColoring:
    """BFS layer parity from the smallest vertex of each component, or an odd cycle proving none exists."""
    loops = sorted(u for u, _ in nx.selfloop_edges(G.multigraph))
    if loops:
        return TwoColoring(odd_cycle=(loops[0],))

    layer: dict[int, int] = {}
    parent: dict[int, int] = {}
    for component in connected_components(G):
        root = component[0]
        layer.update(nx.single_source_shortest_path_length(G.multigraph, root))
        parent.update(nx.bfs_predecessors(G.multigraph, root))

    for u, v in G.edges:
        if layer[u] == layer[v]:
            return TwoColoring(odd_cycle=_odd_cycle(parent, u, v))
    return TwoColoring(coloring=tuple(layer[v] % 2 for v in G.vertices()))


def _odd_cycle(parent: dict[int, int], u: int, v: int) -> tuple[int, ...]:
    # u and v share a BFS layer; climb both to their lowest common ancestor
    left, right = [u], [v]
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return tuple(left + right[-2::-1])


def is_bipartite(G: Graph) -> bool:
    return nx.is_bipartite(G.multigraph)
