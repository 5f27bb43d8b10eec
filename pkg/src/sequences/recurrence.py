"""Constant-coefficient linear recurrences and their closed forms.

A recurrence of order d is

    a_n = c_1 a_{n-1} + c_2 a_{n-2} + ... + c_d a_{n-d}

seeded with d consecutive initial values starting at index ``start`` (1 by
default, 0 for sequences such as Fibonacci with F_0 = 0). Iteration is exact;
the closed form is numeric.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from config.config import load_config
from errors.errors import RepeatedRoots
from genfunc.polynomial import Polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearRecurrence:
    coefficients: tuple[Fraction, ...]
    initial_values: tuple[Fraction, ...]
    start: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        object.__setattr__(self, "initial_values", tuple(Fraction(a) for a in self.initial_values))
        if not self.coefficients:
            raise ValueError("a recurrence needs order at least 1")
        if self.coefficients[-1] == 0:
            raise ValueError("the last coefficient c_d must be nonzero")
        if len(self.initial_values) != len(self.coefficients):
            raise ValueError(
                f"order {len(self.coefficients)} needs exactly {len(self.coefficients)} initial values, "
                f"got {len(self.initial_values)}"
            )
        if self.start not in (0, 1):
            raise ValueError(f"start index must be 0 or 1, got {self.start}")

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @classmethod
    def of(cls, coefficients: Sequence, initial_values: Sequence, start: int = 1) -> "LinearRecurrence":
        return cls(tuple(coefficients), tuple(initial_values), start)


FIBONACCI = LinearRecurrence.of([1, 1], [0, 1], start=0)


@dataclass(frozen=True)
class ClosedForm:
    """a_n = sum z_i r_i^n, with the residual of the system that produced the weights."""

    roots: tuple[complex, ...]
    weights: tuple[complex, ...]
    residual: float = 0.0

    def evaluate(self, n: int) -> complex:
        return sum(z * r**n for z, r in zip(self.weights, self.roots))


def iterate_recurrence(rec: LinearRecurrence, n: int) -> Fraction:
    """a_n by direct exact iteration."""
    if n < rec.start:
        raise ValueError(f"n={n} is before the first index {rec.start}")
    window = list(rec.initial_values)
    offset = n - rec.start
    if offset < rec.order:
        return window[offset]
    for _ in range(offset - rec.order + 1):
        # window holds a_{m-d} .. a_{m-1}, oldest first
        following = sum(c * a for c, a in zip(rec.coefficients, reversed(window)))
        window = window[1:] + [following]
    return window[-1]


def iterate_terms(rec: LinearRecurrence, count: int) -> list[Fraction]:
    """The first ``count`` terms starting at ``rec.start``."""
    terms = list(rec.initial_values[:count])
    while len(terms) < count:
        terms.append(sum(c * terms[-1 - i] for i, c in enumerate(rec.coefficients)))
    return terms


def characteristic_polynomial(rec: LinearRecurrence) -> Polynomial:
    """x^d - c_1 x^{d-1} - ... - c_d."""
    d = rec.order
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[d] = Fraction(1)
    for i, c in enumerate(rec.coefficients, start=1):
        coeffs[d - i] = -c
    return Polynomial(coeffs)


def numeric_roots(poly: Polynomial) -> np.ndarray:
    """Roots as eigenvalues of the companion matrix (numpy.roots)."""
    return np.roots([float(c) for c in reversed(poly.coefficients)])


def check_distinct(roots: Sequence[complex], tolerance: float) -> None:
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            scale = max(1.0, abs(roots[i]), abs(roots[j]))
            if abs(roots[i] - roots[j]) <= tolerance * scale:
                raise RepeatedRoots(f"roots {roots[i]} and {roots[j]} are not separated")


def solve_recurrence(rec: LinearRecurrence, tolerance: float | None = None) -> ClosedForm:
    """Roots of the characteristic polynomial and weights fitted to the initial values."""
    tolerance = load_config().root_tolerance if tolerance is None else tolerance
    roots = [complex(r) for r in numeric_roots(characteristic_polynomial(rec))]
    check_distinct(roots, tolerance)

    indices = range(rec.start, rec.start + rec.order)
    system = np.array([[r**n for r in roots] for n in indices], dtype=complex)
    rhs = np.array([float(a) for a in rec.initial_values], dtype=complex)
    weights = np.linalg.solve(system, rhs)
    residual = float(np.max(np.abs(system @ weights - rhs)))
    logger.debug("Solved order-%d recurrence, condition number %.3g, residual %.3g",
                 rec.order, np.linalg.cond(system), residual)

    return ClosedForm(
        roots=tuple(roots),
        weights=tuple(complex(z) for z in weights),
        residual=residual,
    )


def closed_form_agrees(rec: LinearRecurrence, closed: ClosedForm, n_max: int = 40, tolerance: float | None = None) -> bool:
    """Closed-form values match exact iteration for start <= n <= n_max within a relative tolerance.

    The whole complex value is compared, so a stray imaginary part counts as drift.
    """
    tolerance = load_config().match_tolerance if tolerance is None else tolerance
    for n in range(rec.start, n_max + 1):
        exact = float(iterate_recurrence(rec, n))
        if abs(closed.evaluate(n) - exact) > tolerance * max(1.0, abs(exact)):
            logger.debug("Closed form drifts at n = %d", n)
            return False
    return True
