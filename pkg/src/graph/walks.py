import logging
from dataclasses import dataclass
from enum import StrEnum
from typing import Optional, Sequence

from config.config import load_config
from errors.errors import Disconnected, NoWalk, SizeCapExceeded
from graph.connectivity import is_connected_ignoring_isolated
from graph.graph import Graph
from graph.storage import Matrix, adjacency_matrix

logger = logging.getLogger(__name__)


class EulerTag(StrEnum):
    NO_EULERIAN_WALK = "NoEulerianWalk"
    OPEN_WALK = "OpenWalk"
    CLOSED_WALK = "ClosedWalk"


@dataclass(frozen=True)
class EulerClass:
    tag: EulerTag
    endpoints: Optional[tuple[int, int]] = None


@dataclass(frozen=True)
class Walk:
    """v_0, e_1, v_1, ..., e_k, v_k with edges given as indices into ``G.edges``."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def is_valid(self, G: Graph) -> bool:
        if len(self.vertices) != len(self.edges) + 1:
            return False
        for i, e in enumerate(self.edges):
            if not 0 <= e < G.edge_count:
                return False
            if set(G.edges[e]) != {self.vertices[i], self.vertices[i + 1]}:
                return False
        return True


def euler_classify(G: Graph) -> EulerClass:
    """Classify by the number of odd-degree vertices (0: closed, 2: open, otherwise none)."""
    if not is_connected_ignoring_isolated(G):
        raise Disconnected("Eulerian classification needs a connected graph")
    odd = G.odd_vertices()
    if len(odd) == 0:
        return EulerClass(EulerTag.CLOSED_WALK)
    if len(odd) == 2:
        return EulerClass(EulerTag.OPEN_WALK, (odd[0], odd[1]))
    return EulerClass(EulerTag.NO_EULERIAN_WALK)


def euler_walk(G: Graph) -> Walk:
    """A walk using every edge exactly once (Hierholzer)."""
    classification = euler_classify(G)
    if classification.tag is EulerTag.NO_EULERIAN_WALK:
        raise NoWalk(f"{len(G.odd_vertices())} vertices of odd degree")
    if classification.endpoints is not None:
        start = classification.endpoints[0]
    else:
        start = next((v for v in G.vertices() if G.degree(v) > 0), 0)
    if G.n == 0:
        return Walk((), ())

    used = [False] * G.edge_count
    cursor = [0] * G.n
    stack: list[tuple[int, int]] = [(start, -1)]
    circuit: list[tuple[int, int]] = []
    while stack:
        v, _ = stack[-1]
        incident = G.adjacency[v]
        while cursor[v] < len(incident) and used[incident[cursor[v]][1]]:
            cursor[v] += 1
        if cursor[v] == len(incident):
            circuit.append(stack.pop())
            continue
        w, e = incident[cursor[v]]
        used[e] = True
        stack.append((w, e))

    circuit.reverse()
    walk = Walk(tuple(v for v, _ in circuit), tuple(e for _, e in circuit[1:]))
    logger.debug("Eulerian walk of %d edges from %d", len(walk.edges), start)
    return walk


def hamiltonian_cycle(G: Graph, cap: int | None = None) -> Optional[list[int]]:
    """A cycle through every vertex once, as a vertex list starting at 0, or None.

    Plain backtracking with neighbors tried in index order.
    """
    cap = load_config().hamiltonian_cap if cap is None else cap
    if G.n > cap:
        raise SizeCapExceeded(f"Hamiltonian search is capped at {cap} vertices, got {G.n}")
    if G.n < 3:
        return None

    route = [0]
    on_route = [False] * G.n
    on_route[0] = True

    def extend() -> bool:
        if len(route) == G.n:
            return G.has_edge(route[-1], 0)
        for w in G.neighbors(route[-1]):
            if on_route[w]:
                continue
            route.append(w)
            on_route[w] = True
            if extend():
                return True
            route.pop()
            on_route[w] = False
        return False

    return list(route) if extend() else None


def matrix_multiply(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size)] for i in range(size)]


def matrix_power(matrix: Sequence[Sequence[int]], N: int) -> Matrix:
    """Exact integer matrix power by repeated squaring."""
    if N < 0:
        raise ValueError(f"exponent must be nonnegative, got {N}")
    size = len(matrix)
    result = [[int(i == j) for j in range(size)] for i in range(size)]
    base = [list(row) for row in matrix]
    while N:
        if N & 1:
            result = matrix_multiply(result, base)
        base = matrix_multiply(base, base)
        N >>= 1
    return result


def count_walks_matrix(matrix: Sequence[Sequence[int]], i: int, j: int, N: int) -> int:
    """Walks of length N from i to j in the (possibly directed) graph with this matrix."""
    size = len(matrix)
    for vertex in (i, j):
        if not 0 <= vertex < size:
            raise ValueError(f"vertex {vertex} is not in 0..{size - 1}")
    return matrix_power(matrix, N)[i][j]


def count_walks(G: Graph, i: int, j: int, N: int) -> int:
    return count_walks_matrix(adjacency_matrix(G), i, j, N)


def fibonacci_walk_matrix() -> Matrix:
    """Directed arcs u->u, u->v, v->u with u = 0, v = 1; walks(u, v, N) = F_N."""
    return [[1, 1], [1, 0]]
