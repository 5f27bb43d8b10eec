import pytest
from pydantic import ValidationError

from coloring.planarity import (
    POLYHEDRA,
    PlanarityVerdict,
    PolyhedronData,
    bipartite_planar_bound,
    check_polyhedron,
    euler_characteristic,
    planar_edge_bound,
    planarity_verdict,
    satisfies_face_bound,
)
from graph.graph import complete, complete_bipartite, cycle, make_graph, petersen, platonic


class TestEdgeBounds:
    def test_k5(self):
        assert planar_edge_bound(complete(5)) is PlanarityVerdict.VIOLATES_BOUND
        assert planarity_verdict(complete(5)) is PlanarityVerdict.VIOLATES_BOUND

    def test_k33(self):
        G = complete_bipartite(3, 3)
        assert planar_edge_bound(G) is PlanarityVerdict.INCONCLUSIVE
        assert bipartite_planar_bound(G) is PlanarityVerdict.VIOLATES_BOUND
        assert planarity_verdict(G) is PlanarityVerdict.VIOLATES_BOUND

    @pytest.mark.parametrize("G", [cycle(10), petersen(), platonic("icosahedron"), complete(4)])
    def test_inconclusive(self, G):
        assert planarity_verdict(G) is PlanarityVerdict.INCONCLUSIVE

    def test_rejections(self):
        with pytest.raises(ValueError):
            planar_edge_bound(complete(2))
        with pytest.raises(ValueError):
            planar_edge_bound(make_graph(3, [(0, 1), (0, 1)], allow_multi=True))


class TestEulerFormula:
    def test_characteristic(self):
        assert euler_characteristic(8, 12, 6) == 2
        assert euler_characteristic(4, 4, 2) == 2

    @pytest.mark.parametrize("name", list(POLYHEDRA))
    def test_polyhedra(self, name):
        assert check_polyhedron(POLYHEDRA[name])

    def test_catalog(self):
        assert len(POLYHEDRA) == 9
        assert POLYHEDRA["soccer ball"].f == 32

    def test_platonic_graphs_match_catalog(self):
        for name in ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"):
            G = platonic(name)
            assert (G.n, G.edge_count) == (POLYHEDRA[name].v, POLYHEDRA[name].e)

    def test_non_spherical_counts_fail_the_check(self):
        assert not check_polyhedron(PolyhedronData(name="torus", v=16, e=32, f=16))
        assert not check_polyhedron(PolyhedronData(name="two cubes", v=16, e=24, f=12))
        assert check_polyhedron(PolyhedronData(name="square pyramid", v=5, e=8, f=5))

    def test_rejects_nonpositive_counts(self):
        with pytest.raises(ValidationError):
            PolyhedronData(name="nothing", v=0, e=0, f=2)
        with pytest.raises(ValidationError):
            PolyhedronData(name="hollow", v=4, e=-1, f=4)

    def test_face_bound(self):
        assert satisfies_face_bound(12, 8)
        assert not satisfies_face_bound(4, 4)
