"""Adjacency matrices and the plain-text graph format.

Text format: a header ``n m [multi] [loops]`` followed by m lines ``u v``,
optionally ``u v w`` with a rational weight w. Blank lines and lines starting
with ``#`` are ignored.
"""

from fractions import Fraction
from typing import Sequence

import networkx as nx
import numpy as np

from errors.errors import GraphFormatError
from graph.graph import Graph, from_networkx, make_graph
from utils.rational import format_rational, parse_rational

type Matrix = list[list[int]]

EDGE_DATA = (("weight", parse_rational),)


def adjacency_matrix(G: Graph) -> Matrix:
    """Entry (i, j) is the number of edges joining i and j; a loop contributes 1 to (i, i)."""
    return nx.to_numpy_array(G.multigraph, nodelist=list(G.vertices()), dtype=int).tolist()


def from_adjacency(matrix: Sequence[Sequence[int]]) -> Graph:
    if len(matrix) == 0:
        return make_graph(0, [])
    if any(len(row) != len(matrix) for row in matrix):
        raise ValueError("adjacency matrix must be square")
    A = np.array(matrix, dtype=int)
    asymmetric = np.argwhere(A != A.T)
    if len(asymmetric):
        i, j = asymmetric[0]
        raise ValueError(f"adjacency matrix is not symmetric at ({i}, {j})")
    if (A < 0).any():
        i, j = np.argwhere(A < 0)[0]
        raise ValueError(f"negative multiplicity at ({i}, {j})")
    return from_networkx(nx.from_numpy_array(A, parallel_edges=True, create_using=nx.MultiGraph))


def format_matrix(matrix: Sequence[Sequence[int]]) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in matrix)


def format_graph_text(G: Graph, weights: Sequence[Fraction] | None = None) -> str:
    header = [str(G.n), str(G.edge_count)]
    if G.allow_multi:
        header.append("multi")
    if G.allow_loops:
        header.append("loops")
    if weights is None:
        body = nx.generate_edgelist(G.multigraph, data=False)
    else:
        if len(weights) != G.edge_count:
            raise ValueError(f"{len(weights)} weights for {G.edge_count} edges")
        H = nx.MultiGraph()
        H.add_nodes_from(G.vertices())
        H.add_edges_from((u, v, i, {"weight": format_rational(weights[i])}) for i, (u, v) in enumerate(G.edges))
        body = nx.generate_edgelist(H, data=["weight"])
    return "\n".join([" ".join(header), *body]) + "\n"


def _parse_edge(number: int, fields: list[str]) -> tuple[int, int, Fraction | None]:
    if len(fields) not in (2, 3):
        raise GraphFormatError(number, f"expected 'u v' or 'u v w', got {' '.join(fields)!r}")
    try:
        parsed = nx.parse_edgelist([" ".join(fields)], nodetype=int, data=EDGE_DATA, create_using=nx.MultiGraph)
    except TypeError as e:
        raise GraphFormatError(number, f"{' '.join(fields)!r}: {e.__cause__ or e}")
    ((u, v, attributes),) = parsed.edges(data=True)
    return u, v, attributes.get("weight")


def parse_graph_text(text: str) -> tuple[Graph, list[Fraction] | None]:
    """Parses the text format; returns the graph and, if every edge carries one, the weights."""
    rows = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise GraphFormatError(1, "missing header 'n m [multi] [loops]'")

    header_line, header = rows[0]
    if len(header) < 2:
        raise GraphFormatError(header_line, "header needs vertex and edge counts")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(header_line, f"non-integer counts in header {' '.join(header)!r}")
    flags = set(header[2:])
    unknown = flags - {"multi", "loops"}
    if unknown:
        raise GraphFormatError(header_line, f"unknown header flags {sorted(unknown)}")

    edge_rows = rows[1:]
    if len(edge_rows) != m:
        line = edge_rows[-1][0] if edge_rows else header_line
        raise GraphFormatError(line, f"header announces {m} edges, found {len(edge_rows)}")

    edges: list[tuple[int, int]] = []
    weights: list[Fraction] = []
    for number, fields in edge_rows:
        u, v, weight = _parse_edge(number, fields)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(number, f"endpoint outside 0..{n - 1}")
        if weight is not None:
            weights.append(weight)
        edges.append((u, v))

    if weights and len(weights) != len(edges):
        raise GraphFormatError(edge_rows[0][0], "either every edge or no edge carries a weight")

    try:
        graph = make_graph(n, edges, allow_multi="multi" in flags, allow_loops="loops" in flags)
    except ValueError as e:
        raise GraphFormatError(header_line, str(e))

    if not weights:
        return graph, None
    # make_graph sorts edges canonically; carry the weights along
    order = sorted(range(len(edges)), key=lambda i: (min(edges[i]), max(edges[i])))
    return graph, [weights[i] for i in order]
