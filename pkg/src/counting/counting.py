"""Exact counting functions.

All values are Python ints (arbitrary precision) or ``Fraction``; nothing in
this module touches floating point.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from itertools import combinations
from math import comb, perm, prod
from math import factorial as _factorial
from typing import ClassVar, Iterable, Sequence

from sympy import isprime

from errors.errors import InconsistentCounts

logger = logging.getLogger(__name__)


def _require_natural(name: str, value: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    return value


@dataclass(frozen=True)
class SelectionMode:
    """One cell of the ordered/repeats selection table."""

    ordered: bool
    repeats: bool

    ORDERED_REPEATS: ClassVar["SelectionMode"]
    ORDERED_DISTINCT: ClassVar["SelectionMode"]
    UNORDERED_REPEATS: ClassVar["SelectionMode"]
    UNORDERED_DISTINCT: ClassVar["SelectionMode"]

    @classmethod
    def parse(cls, text: str) -> "SelectionMode":
        """Parses ``ordered/repeats`` style labels, e.g. ``unordered/no-repeats``."""
        try:
            order_part, repeat_part = text.lower().split("/")
        except ValueError:
            raise ValueError(f"selection mode must look like 'ordered/repeats', got {text!r}")
        if order_part not in ("ordered", "unordered") or repeat_part not in ("repeats", "no-repeats"):
            raise ValueError(f"unknown selection mode {text!r}")
        return cls(ordered=order_part == "ordered", repeats=repeat_part == "repeats")


SelectionMode.ORDERED_REPEATS = SelectionMode(ordered=True, repeats=True)
SelectionMode.ORDERED_DISTINCT = SelectionMode(ordered=True, repeats=False)
SelectionMode.UNORDERED_REPEATS = SelectionMode(ordered=False, repeats=True)
SelectionMode.UNORDERED_DISTINCT = SelectionMode(ordered=False, repeats=False)


@dataclass(frozen=True)
class MultisetSpec:
    """Letter multiplicities k1..km of a word over an alphabet of size n."""

    alphabet_size: int
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if not self.multiplicities:
            raise ValueError("a multiset needs at least one multiplicity")
        if any(k <= 0 for k in self.multiplicities):
            raise ValueError("multiplicities must be positive")
        if len(self.multiplicities) > self.alphabet_size:
            raise ValueError("more distinct letters than the alphabet holds")

    @property
    def length(self) -> int:
        return sum(self.multiplicities)

    @classmethod
    def from_word(cls, word: str) -> "MultisetSpec":
        counts = Counter(word)
        return cls(alphabet_size=len(counts), multiplicities=tuple(counts.values()))


class DerangementMethod(StrEnum):
    PRODUCT_RECURRENCE = "product_recurrence"
    AFFINE_RECURRENCE = "affine_recurrence"
    CLOSED_FORM = "closed_form"


class CatalanMethod(StrEnum):
    RECURSION = "recursion"
    CLOSED_FORM = "closed_form"


def factorial(n: int) -> int:
    _require_natural("n", n)
    return _factorial(n)


def falling_factorial(n: int, k: int) -> int:
    """n(n-1)...(n-k+1): the number of ordered k-subsets of an n-set."""
    _require_natural("n", n)
    _require_natural("k", k)
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    return perm(n, k)


def binomial(n: int, k: int) -> int:
    """C(n, k), taken to be 0 when k > n."""
    _require_natural("n", n)
    _require_natural("k", k)
    return comb(n, k)


def generalized_binomial(alpha: Fraction | int, k: int) -> Fraction:
    """alpha(alpha-1)...(alpha-k+1)/k! for any rational alpha."""
    _require_natural("k", k)
    alpha = Fraction(alpha)
    numerator = Fraction(1)
    for i in range(k):
        numerator *= alpha - i
    return numerator / factorial(k)


def selection_count(n: int, k: int, mode: SelectionMode) -> int:
    """Number of ways to choose k objects out of n, per the 2x2 selection table."""
    _require_natural("n", n)
    _require_natural("k", k)
    if mode.ordered and mode.repeats:
        return n**k
    if mode.ordered:
        return falling_factorial(n, k) if k <= n else 0
    if not mode.repeats:
        return binomial(n, k)
    if n == 0:
        return 1 if k == 0 else 0
    return binomial(n + k - 1, k)


def multinomial(parts: Sequence[int]) -> int:
    """(sum parts)! / prod(parts_i!)."""
    result = 1
    total = 0
    # product of binomials avoids the big factorial quotient
    for part in parts:
        _require_natural("part", part)
        total += part
        result *= binomial(total, part)
    return result


def anagram_count(word: str) -> int:
    if not word:
        raise ValueError("word must be nonempty")
    return multinomial(MultisetSpec.from_word(word).multiplicities)


def subset_count(n: int) -> int:
    _require_natural("n", n)
    return 2**n


def even_subset_count(n: int) -> int:
    _require_natural("n", n)
    return 1 if n == 0 else 2 ** (n - 1)


def odd_subset_count(n: int) -> int:
    _require_natural("n", n)
    return 0 if n == 0 else 2 ** (n - 1)


def triangular(n: int) -> int:
    """1 + 2 + ... + n."""
    _require_natural("n", n)
    return n * (n + 1) // 2


def ordered_set_partitions(sizes: Sequence[int]) -> int:
    """Ways to split a set into labelled blocks of the given sizes."""
    return multinomial(sizes)


def lattice_paths(a: int, b: int) -> int:
    """Monotone lattice paths from (0, 0) to (a, b) using unit east/north steps."""
    _require_natural("a", a)
    _require_natural("b", b)
    return binomial(a + b, a)


def distribute_identical(k: int, n: int, at_least_one: bool = False) -> int:
    """Ways to put k identical objects into n distinct boxes."""
    _require_natural("k", k)
    _require_natural("n", n)
    if not at_least_one:
        return selection_count(n, k, SelectionMode.UNORDERED_REPEATS)
    if n == 0:
        return 1 if k == 0 else 0
    if k < n:
        return 0
    return binomial(k - 1, n - 1)


def pascal_rows(n_max: int) -> list[list[int]]:
    """Rows 0..n_max of Pascal's triangle built with the addition recurrence."""
    _require_natural("n_max", n_max)
    rows = [[1]]
    for _ in range(n_max):
        previous = rows[-1]
        rows.append([1] + [previous[k] + previous[k + 1] for k in range(len(previous) - 1)] + [1])
    return rows


def pascal_row(n: int) -> list[int]:
    _require_natural("n", n)
    row = [1]
    for k in range(n):
        row.append(row[-1] * (n - k) // (k + 1))
    return row


def pascal_row_mod(n: int, m: int) -> list[int]:
    _require_natural("n", n)
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    return [entry % m for entry in pascal_row(n)]


def row_sum(n: int) -> int:
    return sum(pascal_row(n))


def alternating_row_sum(n: int) -> int:
    return sum((-1) ** k * entry for k, entry in enumerate(pascal_row(n)))


def square_row_sum(n: int) -> int:
    return sum(entry * entry for entry in pascal_row(n))


def hockey_stick(n: int, m: int) -> int:
    """Sum of C(n+j, j) for j = 0..m; equals C(n+m+1, m)."""
    return sum(binomial(n + j, j) for j in range(m + 1))


def vandermonde(n: int, m: int, l: int) -> int:
    """Sum over k of C(n, k) C(m, l-k); equals C(n+m, l)."""
    return sum(binomial(n, k) * binomial(m, l - k) for k in range(l + 1))


def union_count_2(a: int, b: int, ab: int) -> int:
    """|A u B| from |A|, |B| and |A n B|."""
    for name, value in (("a", a), ("b", b), ("ab", ab)):
        _require_natural(name, value)
    result = a + b - ab
    if result < 0 or ab > min(a, b):
        raise InconsistentCounts(f"|A|={a}, |B|={b}, |AB|={ab} cannot come from finite sets")
    return result


def union_count_3(a: int, b: int, c: int, ab: int, ac: int, bc: int, abc: int) -> int:
    """|A u B u C| by the seven-term inclusion-exclusion sum."""
    for name, value in (("a", a), ("b", b), ("c", c), ("ab", ab), ("ac", ac), ("bc", bc), ("abc", abc)):
        _require_natural(name, value)
    result = a + b + c - ab - ac - bc + abc
    if result < 0:
        raise InconsistentCounts(f"inclusion-exclusion sum is negative ({result})")
    return result


def coprime_count(N: int, primes: Iterable[int]) -> int:
    """Numbers in 1..N divisible by none of the given primes."""
    _require_natural("N", N)
    primes = list(primes)
    if len(set(primes)) != len(primes):
        raise ValueError(f"primes must be distinct, got {primes}")
    for p in primes:
        if not isprime(p):
            raise ValueError(f"{p} is not prime")
        if N % p != 0:
            raise ValueError(f"{p} does not divide {N}")

    logger.debug("Inclusion-exclusion over %d prime subsets", 2 ** len(primes))
    total = 0
    for size in range(len(primes) + 1):
        sign = (-1) ** size
        for subset in combinations(primes, size):
            total += sign * (N // prod(subset))
    return total


def derangement(n: int, method: DerangementMethod | str = DerangementMethod.PRODUCT_RECURRENCE) -> int:
    """Number of permutations of n items with no fixed point (D_0 = 1)."""
    _require_natural("n", n)
    method = DerangementMethod(method)
    if method is DerangementMethod.PRODUCT_RECURRENCE:
        # D_n = (n-1)(D_{n-1} + D_{n-2})
        previous, current = 1, 0
        if n == 0:
            return previous
        for i in range(2, n + 1):
            previous, current = current, (i - 1) * (current + previous)
        return current
    if method is DerangementMethod.AFFINE_RECURRENCE:
        # D_n = n D_{n-1} + (-1)^n
        value = 1
        for i in range(1, n + 1):
            value = i * value + (-1) ** i
        return value
    # n! * sum (-1)^k / k!, with n!/k! kept integral
    total = 0
    tail = 1  # n!/k! for k running down from n
    for k in range(n, -1, -1):
        total += (-1) ** k * tail
        tail *= k if k > 0 else 1
    return total


def catalan(n: int, method: CatalanMethod | str = CatalanMethod.CLOSED_FORM) -> int:
    _require_natural("n", n)
    method = CatalanMethod(method)
    if method is CatalanMethod.CLOSED_FORM:
        return binomial(2 * n, n) // (n + 1)
    values = [1]
    for m in range(n):
        values.append(sum(values[i] * values[m - i] for i in range(m + 1)))
    return values[n]
