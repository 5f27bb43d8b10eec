from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable

from utils.rational import format_rational


def _normalize(coefficients: Iterable) -> tuple[Fraction, ...]:
    coeffs = [Fraction(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True, init=False)
class Polynomial:
    """Polynomial with exact rational coefficients; index i holds the x^i coefficient."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable = ()):
        object.__setattr__(self, "coefficients", _normalize(coefficients))

    @classmethod
    def monomial(cls, degree: int, coefficient=1) -> "Polynomial":
        return cls([0] * degree + [coefficient])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def __call__(self, x):
        result = 0
        for c in reversed(self.coefficients):
            result = result * x + (c if isinstance(x, Fraction | int) else float(c))
        return result

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(a + b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=0))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coefficients)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coefficients)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return Polynomial(product)

    __rmul__ = __mul__

    def reversed(self, degree: int | None = None) -> "Polynomial":
        """x^degree * p(1/x); degree defaults to deg p."""
        degree = self.degree if degree is None else degree
        if degree < self.degree:
            raise ValueError(f"degree {degree} is below the polynomial degree {self.degree}")
        padded = list(self.coefficients) + [Fraction(0)] * (degree + 1 - len(self.coefficients))
        return Polynomial(reversed(padded))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            text = format_rational(abs(c))
            if i == 0:
                body = text
            else:
                power = "x" if i == 1 else f"x^{i}"
                body = power if abs(c) == 1 else f"{text}*{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out
