from unittest.mock import patch

import pytest

from coloring.chromatic import ChromaticPolynomial, _contract, chromatic_polynomial, count_colorings
from errors.errors import NotSimple, SizeCapExceeded
from graph.graph import complete, complete_bipartite, cycle, empty, make_graph, path, petersen, platonic


def _falling(k: int, n: int) -> int:
    result = 1
    for i in range(n):
        result *= k - i
    return result


class TestChromaticPolynomial:
    @pytest.mark.parametrize(
        "G, coefficients",
        [
            (cycle(4), (0, -3, 6, -4, 1)),
            (complete(3), (0, 2, -3, 1)),
            (cycle(5), (0, 4, -10, 10, -5, 1)),
            (empty(3), (0, 0, 0, 1)),
            (empty(0), (1,)),
            (path(3), (0, 1, -2, 1)),
        ],
    )
    def test_known_polynomials(self, G, coefficients):
        assert chromatic_polynomial(G).coefficients == coefficients

    def test_str_and_evaluation(self):
        p = chromatic_polynomial(cycle(4))
        assert str(p) == "[0, -3, 6, -4, 1]"
        assert p.degree == 4
        assert p(2) == 2
        assert ChromaticPolynomial((0, 2, -3, 1))(3) == 6

    @pytest.mark.parametrize("n", range(1, 7))
    def test_complete_graphs_give_falling_factorials(self, n):
        p = chromatic_polynomial(complete(n))
        assert [p(k) for k in range(8)] == [_falling(k, n) for k in range(8)]

    @pytest.mark.parametrize(
        "G",
        [cycle(6), petersen(), complete_bipartite(2, 3), platonic("cube"), make_graph(5, [(0, 1), (2, 3)])],
    )
    def test_agrees_with_counting(self, G):
        p = chromatic_polynomial(G)
        for k in range(5):
            assert p(k) == count_colorings(G, k)

    def test_subproblems_are_not_kept_between_calls(self):
        with patch("coloring.chromatic._contract", wraps=_contract) as contract:
            first = chromatic_polynomial(petersen())
            calls = contract.call_count
            assert calls > 0
            assert chromatic_polynomial(petersen()) == first
            assert contract.call_count == 2 * calls

    def test_caps_and_rejections(self):
        with pytest.raises(SizeCapExceeded):
            chromatic_polynomial(complete(7))
        with pytest.raises(NotSimple):
            chromatic_polynomial(make_graph(2, [(0, 1), (0, 1)], allow_multi=True))
        with pytest.raises(SizeCapExceeded):
            count_colorings(complete(8), 10)
        with pytest.raises(ValueError):
            count_colorings(complete(2), -1)
