from fractions import Fraction

import pytest

from counting.counting import binomial, catalan
from errors.errors import RepeatedFactor
from genfunc.polynomial import Polynomial
from genfunc.rational_gf import (
    PartialFraction,
    RationalGF,
    catalan_gf,
    expand_rational,
    partial_fractions,
    recombine,
    recurrence_to_gf,
)
from sequences.recurrence import FIBONACCI, LinearRecurrence, iterate_recurrence

TWO_POWERS_MINUS_ONE = RationalGF(Polynomial([0, 1]), Polynomial([1, -3, 2]))
FIBONACCI_GF = RationalGF(Polynomial([0, 1]), Polynomial([1, -1, -1]))


class TestExpandRational:
    def test_geometric_multiple(self):
        series = expand_rational(RationalGF(Polynomial([3]), Polynomial([1, -2])), 20)
        assert list(series.coefficients) == [3 * 2**n for n in range(21)]

    def test_two_powers_minus_one(self):
        series = expand_rational(TWO_POWERS_MINUS_ONE, 30)
        assert list(series.coefficients) == [2**n - 1 for n in range(31)]

    def test_cube_of_geometric(self):
        # 1 / (1 - x)^3
        series = expand_rational(RationalGF(Polynomial([1]), Polynomial([1, -3, 3, -1])), 15)
        assert list(series.coefficients) == [binomial(n + 2, 2) for n in range(16)]

    def test_rejects_zero_constant_term(self):
        with pytest.raises(ValueError):
            RationalGF(Polynomial([1]), Polynomial([0, 1]))


class TestPartialFractions:
    def test_exact_decomposition(self):
        terms = partial_fractions(TWO_POWERS_MINUS_ONE)
        assert terms == [PartialFraction(Fraction(-1), Fraction(1)), PartialFraction(Fraction(1), Fraction(2))]
        assert all(t.exact for t in terms)
        assert recombine(terms, 10) == [2**n - 1 for n in range(11)]

    def test_numeric_decomposition(self):
        terms = partial_fractions(FIBONACCI_GF)
        assert not any(t.exact for t in terms)
        psi, phi = terms
        assert phi.root.real == pytest.approx((1 + 5**0.5) / 2)
        assert psi.root.real == pytest.approx((1 - 5**0.5) / 2)
        assert phi.weight.real == pytest.approx(1 / 5**0.5)
        assert psi.weight.real == pytest.approx(-1 / 5**0.5)
        for n, value in enumerate(recombine(terms, 30)):
            assert round(value.real) == iterate_recurrence(FIBONACCI, n)

    def test_repeated_factor(self):
        with pytest.raises(RepeatedFactor):
            partial_fractions(RationalGF(Polynomial([1]), Polynomial([1, -2, 1])))

    def test_numerator_degree(self):
        with pytest.raises(ValueError):
            partial_fractions(RationalGF(Polynomial([0, 0, 1]), Polynomial([1, -3, 2])))


class TestRecurrenceToGF:
    def test_fibonacci(self):
        assert recurrence_to_gf(FIBONACCI) == FIBONACCI_GF

    def test_three_minus_two(self):
        rec = LinearRecurrence.of([5, -6], [0, 1], start=0)
        assert recurrence_to_gf(rec) == RationalGF(Polynomial([0, 1]), Polynomial([1, -5, 6]))

    def test_first_order(self):
        rec = LinearRecurrence.of([2], [3], start=0)
        assert recurrence_to_gf(rec) == RationalGF(Polynomial([3]), Polynomial([1, -2]))

    @pytest.mark.parametrize(
        "rec",
        [
            FIBONACCI,
            LinearRecurrence.of([1, 20], [1, 1], start=1),
            LinearRecurrence.of([1, 1, 1], [1, 1, 2], start=0),
            LinearRecurrence.of([Fraction(1, 2), 3], [2, -1], start=1),
        ],
    )
    def test_expansion_matches_iteration(self, rec):
        series = expand_rational(recurrence_to_gf(rec), 25)
        for n in range(rec.start):
            assert series[n] == 0
        for n in range(rec.start, 26):
            assert series[n] == iterate_recurrence(rec, n)


class TestCatalanGF:
    def test_first_terms(self):
        assert list(catalan_gf(9).coefficients) == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]

    def test_matches_closed_form(self):
        series = catalan_gf(20)
        assert series[12] == 208012
        assert list(series.coefficients) == [catalan(n) for n in range(21)]

    def test_functional_equation(self):
        # C = 1 + x C^2
        C = catalan_gf(15)
        squared = C * C
        assert all(C[n] == squared[n - 1] for n in range(1, 16))
