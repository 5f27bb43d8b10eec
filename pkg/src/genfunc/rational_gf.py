import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

from config.config import load_config
from errors.errors import RepeatedFactor, RepeatedRoots
from genfunc.polynomial import Polynomial
from genfunc.series import TruncatedSeries, series_sqrt, series_from
from sequences.recurrence import LinearRecurrence, check_distinct, characteristic_polynomial, iterate_terms

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RationalGF:
    """numerator / denominator with denominator(0) != 0, so it expands as a power series."""

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self):
        if self.denominator.coefficient(0) == 0:
            raise ValueError("denominator must have a nonzero constant term")

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


@dataclass(frozen=True)
class PartialFraction:
    """weight / (1 - root x)."""

    weight: Fraction | complex
    root: Fraction | complex

    @property
    def exact(self) -> bool:
        return isinstance(self.weight, Fraction) and isinstance(self.root, Fraction)


def expand_rational(R: RationalGF, order: int) -> TruncatedSeries:
    """The series S with S * denominator = numerator through x^order."""
    q = R.denominator.coefficients
    q0 = q[0]
    coeffs: list[Fraction] = []
    for n in range(order + 1):
        total = R.numerator.coefficient(n)
        for k in range(1, min(n, len(q) - 1) + 1):
            total -= q[k] * coeffs[n - k]
        coeffs.append(total / q0)
    return TruncatedSeries(order, coeffs)


def _exact_roots(poly: Polynomial) -> list[Fraction] | None:
    """All roots of poly if every one is rational, else None."""
    x = sympy.Symbol("x")
    sym = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(poly.coefficients)], x)
    rational = sympy.roots(sym, filter="Q")
    if sum(rational.values()) != poly.degree:
        return None
    if any(multiplicity > 1 for multiplicity in rational.values()):
        raise RepeatedFactor(f"denominator has a repeated linear factor: {poly}")
    return sorted(Fraction(int(r.p), int(r.q)) for r in rational)


def partial_fractions(R: RationalGF, tolerance: float | None = None) -> list[PartialFraction]:
    """Decompose R into sum z_i / (1 - r_i x) over distinct linear factors of the denominator."""
    if R.numerator.degree >= R.denominator.degree:
        raise ValueError("numerator degree must be below the denominator degree")
    tolerance = load_config().root_tolerance if tolerance is None else tolerance
    q0 = R.denominator.coefficient(0)
    # roots of x^d Q(1/x) are the r_i with Q(x) = q0 prod(1 - r_i x)
    reversed_denominator = R.denominator.reversed()

    roots = _exact_roots(reversed_denominator)
    if roots is not None:
        logger.debug("All %d roots are rational, decomposing exactly", len(roots))
        terms = []
        for i, r in enumerate(roots):
            rest = Fraction(1)
            for j, s in enumerate(roots):
                if j != i:
                    rest *= 1 - s / r
            terms.append(PartialFraction(R.numerator(1 / r) / (q0 * rest), r))
        return terms

    numeric = [complex(r) for r in np.roots([float(c) for c in reversed(reversed_denominator.coefficients)])]
    try:
        check_distinct(numeric, tolerance)
    except RepeatedRoots as e:
        raise RepeatedFactor(str(e))
    numeric.sort(key=lambda r: (r.real, r.imag))
    terms = []
    for i, r in enumerate(numeric):
        rest = complex(1)
        for j, s in enumerate(numeric):
            if j != i:
                rest *= 1 - s / r
        terms.append(PartialFraction(R.numerator(1 / r) / (float(q0) * rest), r))
    return terms


def recombine(terms: list[PartialFraction], order: int) -> list:
    """Coefficients 0..order of sum z_i / (1 - r_i x), i.e. sum z_i r_i^n."""
    return [sum(t.weight * t.root**n for t in terms) for n in range(order + 1)]


def recurrence_to_gf(rec: LinearRecurrence) -> RationalGF:
    """Generating function sum a_n x^n (a_n = 0 before the first index) as a rational function."""
    denominator = characteristic_polynomial(rec).reversed()
    span = rec.start + rec.order
    leading = [Fraction(0)] * rec.start + iterate_terms(rec, rec.order)
    product = Polynomial(leading) * denominator
    numerator = Polynomial(product.coefficients[:span])
    return RationalGF(numerator, denominator)


def catalan_gf(order: int) -> TruncatedSeries:
    """(1 - sqrt(1 - 4x)) / (2x) through x^order."""
    root = series_sqrt(series_from([1, -4], order + 1))
    # the constant terms cancel, so dividing by 2x is a shift down
    return TruncatedSeries(order, (-c / 2 for c in root.coefficients[1:]))
