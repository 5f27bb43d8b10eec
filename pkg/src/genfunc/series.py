"""Formal power series truncated at a fixed order T.

A ``TruncatedSeries`` stores exactly a_0..a_T. Binary operations require equal
orders so no precision is lost silently.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from counting.counting import generalized_binomial
from genfunc.polynomial import Polynomial
from utils.rational import format_rational


@dataclass(frozen=True, init=False)
class TruncatedSeries:
    order: int
    coefficients: tuple[Fraction, ...]

    def __init__(self, order: int, coefficients: Iterable = ()):
        if order < 0:
            raise ValueError(f"truncation order must be nonnegative, got {order}")
        coeffs = [Fraction(c) for c in coefficients][: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, series_scale(other, -1))

    def __mul__(self, other: "TruncatedSeries | Fraction | int") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def to_polynomial(self) -> Polynomial:
        return Polynomial(self.coefficients)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coefficients):
            if n == 0:
                terms.append(format_rational(c))
            else:
                power = "x" if n == 1 else f"x^{n}"
                terms.append(f"{format_rational(c)}*{power}")
        return " + ".join(terms) + f" + O(x^{self.order + 1})"


def _same_order(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise ValueError(f"truncation orders differ: {a.order} != {b.order}")


def series_from(coefficients: Iterable, order: int) -> TruncatedSeries:
    return TruncatedSeries(order, coefficients)


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries(order)


def one(order: int) -> TruncatedSeries:
    return TruncatedSeries(order, [1])


def geometric(order: int) -> TruncatedSeries:
    """1 + x + x^2 + ... = 1/(1-x)."""
    return TruncatedSeries(order, [1] * (order + 1))


def from_polynomial(poly: Polynomial, order: int) -> TruncatedSeries:
    return TruncatedSeries(order, poly.coefficients)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _same_order(a, b)
    return TruncatedSeries(a.order, (x + y for x, y in zip(a.coefficients, b.coefficients)))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _same_order(a, b)
    T = a.order
    product = [Fraction(0)] * (T + 1)
    for i, x in enumerate(a.coefficients):
        if x == 0:
            continue
        for j in range(T + 1 - i):
            product[i + j] += x * b.coefficients[j]
    return TruncatedSeries(T, product)


def series_shift(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by x^k."""
    if k < 0:
        raise ValueError(f"shift must be nonnegative, got {k}")
    return TruncatedSeries(a.order, [0] * k + list(a.coefficients))


def series_scale(a: TruncatedSeries, c: Fraction | int) -> TruncatedSeries:
    c = Fraction(c)
    return TruncatedSeries(a.order, (c * x for x in a.coefficients))


def series_derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Coefficient n is (n+1) a_{n+1}; the order drops by one."""
    if a.order == 0:
        raise ValueError("cannot differentiate a series truncated at order 0")
    return TruncatedSeries(a.order - 1, ((n + 1) * a.coefficients[n + 1] for n in range(a.order)))


def substitute_monomial(a: TruncatedSeries, c: Fraction | int, m: int) -> TruncatedSeries:
    """A(c x^m): coefficient of x^{mn} is a_n c^n."""
    if m < 1:
        raise ValueError(f"only monomials of positive degree may be substituted, got degree {m}")
    c = Fraction(c)
    coeffs = [Fraction(0)] * (a.order + 1)
    for n in range(a.order // m + 1):
        coeffs[m * n] = a.coefficients[n] * c**n
    return TruncatedSeries(a.order, coeffs)


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """1/A for a series with nonzero constant term."""
    a0 = a.coefficients[0]
    if a0 == 0:
        raise ValueError("a series with zero constant term has no inverse")
    inverse = [1 / a0]
    for n in range(1, a.order + 1):
        total = sum(a.coefficients[k] * inverse[n - k] for k in range(1, n + 1))
        inverse.append(-total / a0)
    return TruncatedSeries(a.order, inverse)


def series_sqrt(a: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """The square root with constant term +1, determined one coefficient at a time."""
    order = a.order if order is None else order
    if order > a.order:
        raise ValueError(f"order {order} exceeds the series order {a.order}")
    if a.coefficients[0] != 1:
        raise ValueError(f"square root needs constant term 1, got {format_rational(a.coefficients[0])}")
    root = [Fraction(1)]
    for n in range(1, order + 1):
        cross = sum(root[k] * root[n - k] for k in range(1, n))
        root.append((a.coefficients[n] - cross) / 2)
    return TruncatedSeries(order, root)


def binomial_series(alpha: Fraction | int, order: int) -> TruncatedSeries:
    """(1 + x)^alpha for rational alpha."""
    return TruncatedSeries(order, (generalized_binomial(alpha, k) for k in range(order + 1)))
