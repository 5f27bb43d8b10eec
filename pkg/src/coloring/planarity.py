"""Necessary conditions for planarity and Euler's formula on polyhedra.

Nothing here certifies that a graph is planar; an edge bound can only show
that it is not.
"""

from enum import StrEnum

from pydantic import BaseModel, Field

from graph.connectivity import is_bipartite
from graph.graph import Graph


class PlanarityVerdict(StrEnum):
    VIOLATES_BOUND = "ViolatesBound"
    INCONCLUSIVE = "Inconclusive"


def _require_three_vertices(G: Graph) -> None:
    G.require_simple()
    if G.n < 3:
        raise ValueError(f"edge bounds need at least 3 vertices, got {G.n}")


def planar_edge_bound(G: Graph) -> PlanarityVerdict:
    """A simple planar graph on v >= 3 vertices has at most 3v - 6 edges."""
    _require_three_vertices(G)
    if G.edge_count > 3 * G.n - 6:
        return PlanarityVerdict.VIOLATES_BOUND
    return PlanarityVerdict.INCONCLUSIVE


def bipartite_planar_bound(G: Graph) -> PlanarityVerdict:
    """A bipartite planar graph has no triangles, so at most 2v - 4 edges."""
    _require_three_vertices(G)
    if is_bipartite(G) and G.edge_count > 2 * G.n - 4:
        return PlanarityVerdict.VIOLATES_BOUND
    return PlanarityVerdict.INCONCLUSIVE


def planarity_verdict(G: Graph) -> PlanarityVerdict:
    if PlanarityVerdict.VIOLATES_BOUND in (planar_edge_bound(G), bipartite_planar_bound(G)):
        return PlanarityVerdict.VIOLATES_BOUND
    return PlanarityVerdict.INCONCLUSIVE


def euler_characteristic(v: int, e: int, f: int) -> int:
    return v - e + f


def satisfies_face_bound(e: int, f: int) -> bool:
    """Every face of a simple planar graph has at least three sides: 2e >= 3f."""
    return 2 * e >= 3 * f


class PolyhedronData(BaseModel, frozen=True):
    name: str
    v: int = Field(ge=1)
    e: int = Field(ge=0)
    f: int = Field(ge=1)


def check_polyhedron(p: PolyhedronData) -> bool:
    """Whether the counts satisfy v - e + f = 2, as every convex polyhedron does."""
    return euler_characteristic(p.v, p.e, p.f) == 2


POLYHEDRA: dict[str, PolyhedronData] = {
    p.name: p
    for p in (
        PolyhedronData(name="tetrahedron", v=4, e=6, f=4),
        PolyhedronData(name="cube", v=8, e=12, f=6),
        PolyhedronData(name="octahedron", v=6, e=12, f=8),
        PolyhedronData(name="dodecahedron", v=20, e=30, f=12),
        PolyhedronData(name="icosahedron", v=12, e=30, f=20),
        PolyhedronData(name="soccer ball", v=60, e=90, f=32),
        PolyhedronData(name="basketball", v=6, e=12, f=8),
        PolyhedronData(name="football", v=2, e=4, f=4),
        PolyhedronData(name="volleyball", v=32, e=48, f=18),
    )
}
