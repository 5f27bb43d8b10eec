"""Undirected (multi)graphs on the vertex set {0, ..., n-1}.

Graphs are immutable values. Edges are stored canonically as sorted ``(u, v)``
pairs with ``u <= v``, in sorted order, so two graphs with the same edge
multiset compare equal, and the position of an edge in ``edges`` is its index.
Queries run on a networkx ``MultiGraph`` view whose edge keys are those
indices. A loop adds 2 to the degree of its vertex.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import networkx as nx

from errors.errors import NotSimple

logger = logging.getLogger(__name__)

type Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    allow_multi: bool = False
    allow_loops: bool = False

    @cached_property
    def multigraph(self) -> nx.MultiGraph:
        H = nx.MultiGraph()
        H.add_nodes_from(range(self.n))
        H.add_edges_from((u, v, index, {}) for index, (u, v) in enumerate(self.edges))
        return H

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the (neighbor, edge index) pairs in sorted order; a loop appears once."""
        return tuple(
            tuple(sorted((w, key) for _, w, key in self.multigraph.edges(v, keys=True))) for v in self.vertices()
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> list[int]:
        """Distinct neighbors of v in increasing order."""
        return sorted(self.multigraph.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return self.multigraph.has_edge(u, v)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} is not in 0..{self.n - 1}")
        return self.multigraph.degree(v)

    def degree_sequence(self) -> list[int]:
        return sorted(d for _, d in self.multigraph.degree())

    def is_simple(self) -> bool:
        return nx.number_of_selfloops(self.multigraph) == 0 and len(set(self.edges)) == len(self.edges)

    def require_simple(self) -> None:
        if not self.is_simple():
            raise NotSimple("operation requires a simple graph (no loops or parallel edges)")

    def odd_vertices(self) -> list[int]:
        return sorted(v for v, d in self.multigraph.degree() if d % 2 == 1)

    def with_edges(self, edges: Iterable[Edge]) -> "Graph":
        """A graph on the same vertices and flags with a different edge list."""
        return make_graph(self.n, edges, allow_multi=self.allow_multi, allow_loops=self.allow_loops)

    def neighborhood(self, vertices: Iterable[int]) -> set[int]:
        """N(S): every vertex adjacent to some vertex of S."""
        return set().union(*(self.multigraph.adj[v] for v in vertices))


def make_graph(n: int, edges: Iterable[Edge], allow_multi: bool = False, allow_loops: bool = False) -> Graph:
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    canonical = []
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v and not allow_loops:
            raise ValueError(f"loop at {u} but loops are not allowed")
        canonical.append(canonical_edge(u, v))
    if not allow_multi:
        duplicated = [edge for edge, count in Counter(canonical).items() if count > 1]
        if duplicated:
            raise ValueError(f"duplicate edges {duplicated} but multi-edges are not allowed")
    return Graph(n, tuple(sorted(canonical)), allow_multi, allow_loops)


def from_networkx(H: nx.Graph, allow_multi: bool | None = None, allow_loops: bool | None = None) -> Graph:
    """Converts a networkx graph, relabelling its nodes 0..n-1 in sorted order.

    Flags left as None are inferred from whether H has parallel edges or loops.
    """
    H = nx.convert_node_labels_to_integers(H, ordering="sorted")
    edges = [canonical_edge(u, v) for u, v in H.edges()]
    if allow_multi is None:
        allow_multi = len(set(edges)) < len(edges)
    if allow_loops is None:
        allow_loops = nx.number_of_selfloops(H) > 0
    return make_graph(H.number_of_nodes(), edges, allow_multi, allow_loops)


def subgraph(G: Graph, edge_indices: Iterable[int]) -> Graph:
    """Spanning subgraph keeping only the chosen edges."""
    return G.with_edges(G.edges[i] for i in edge_indices)


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on the given vertices, relabelled 0..k-1 in increasing order."""
    return from_networkx(G.multigraph.subgraph(set(vertices)), G.allow_multi, G.allow_loops)


def complement(G: Graph) -> Graph:
    """Edges exactly where G has none."""
    G.require_simple()
    return from_networkx(nx.complement(nx.Graph(G.multigraph)))


# Named constructors with fixed labelings


def empty(n: int) -> Graph:
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    return from_networkx(nx.empty_graph(n))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"K_n needs n >= 1, got {n}")
    return from_networkx(nx.complete_graph(n))


def path(n: int) -> Graph:
    """P_n: vertices 0..n-1, edges {i, i+1}."""
    if n < 1:
        raise ValueError(f"P_n needs n >= 1, got {n}")
    return from_networkx(nx.path_graph(n))


def cycle(n: int) -> Graph:
    """C_n: edges {i, i+1 mod n}."""
    if n < 3:
        raise ValueError(f"C_n needs n >= 3, got {n}")
    return from_networkx(nx.cycle_graph(n))


def complete_bipartite(a: int, b: int) -> Graph:
    """B_{a,b}: left part 0..a-1, right part a..a+b-1."""
    if a < 0 or b < 0:
        raise ValueError(f"part sizes must be nonnegative, got {a}, {b}")
    return from_networkx(nx.complete_bipartite_graph(a, b))


def generalized_petersen(n: int, k: int) -> Graph:
    """Outer cycle 0..n-1, spokes i -- n+i, inner edges n+i -- n+(i+k mod n)."""
    if n < 3 or not 1 <= k < n / 2:
        raise ValueError(f"generalized Petersen graph needs n >= 3 and 1 <= k < n/2, got {n}, {k}")
    H = nx.cycle_graph(n)
    H.add_edges_from((i, n + i) for i in range(n))
    H.add_edges_from((n + i, n + (i + k) % n) for i in range(n))
    return from_networkx(H)


def petersen() -> Graph:
    return from_networkx(nx.petersen_graph())


PLATONIC = {
    "tetrahedron": nx.tetrahedral_graph,
    "cube": nx.cubical_graph,
    "octahedron": nx.octahedral_graph,
    "dodecahedron": nx.dodecahedral_graph,
    "icosahedron": nx.icosahedral_graph,
}
PLATONIC_NAMES = tuple(PLATONIC)


def platonic(name: str) -> Graph:
    try:
        build = PLATONIC[name.lower()]
    except KeyError:
        raise ValueError(f"unknown Platonic solid {name!r}; expected one of {', '.join(PLATONIC_NAMES)}")
    return from_networkx(build())


def konigsberg() -> Graph:
    """The seven bridges: 0 central island, 1 north bank, 2 south bank, 3 east island."""
    bridges = [(0, 1), (0, 1), (0, 2), (0, 2), (0, 3), (1, 3), (2, 3)]
    return from_networkx(nx.MultiGraph(bridges))


def hamster_cage() -> Graph:
    """A pendant vertex 0 attached to vertex 1 of the 4-cycle 1-2-3-4."""
    return from_networkx(nx.Graph([(0, 1), (1, 2), (2, 3), (3, 4), (1, 4)]))
