import logging
from typing import Optional, Sequence

from pydantic import BaseModel, Field

from genfunc.polynomial import Polynomial
from genfunc.series import TruncatedSeries, geometric, one, series_from, series_mul, substitute_monomial

logger = logging.getLogger(__name__)


class CoinSpec(BaseModel):
    """A coin of the given value available ``max_count`` times (None for unlimited)."""

    value: int = Field(ge=1)
    max_count: Optional[int] = Field(default=None, ge=0)

    @property
    def unlimited(self) -> bool:
        return self.max_count is None

    @classmethod
    def parse(cls, text: str) -> "CoinSpec":
        """Parses ``valueXcount``, e.g. ``25x3`` or ``1xinf``."""
        try:
            value, count = text.lower().split("x")
        except ValueError:
            raise ValueError(f"coin spec must look like 'valueXcount', got {text!r}")
        max_count = None if count == "inf" else int(count)
        return cls(value=int(value), max_count=max_count)


def coin_factor(coin: CoinSpec) -> Polynomial:
    """1 + x^k + x^{2k} + ... + x^{nk} for a limited coin."""
    if coin.unlimited:
        raise ValueError("an unlimited coin has no polynomial factor")
    coeffs = [0] * (coin.value * coin.max_count + 1)
    for i in range(coin.max_count + 1):
        coeffs[i * coin.value] = 1
    return Polynomial(coeffs)


def coin_change_poly(coins: Sequence[CoinSpec], order: int | None = None) -> Polynomial | TruncatedSeries:
    """Product of the coin factors; a truncated series when ``order`` is given."""
    if order is None:
        if any(coin.unlimited for coin in coins):
            raise ValueError("unlimited coins need a truncation order")
        result = Polynomial([1])
        for coin in coins:
            result = result * coin_factor(coin)
        return result

    result = one(order)
    for coin in coins:
        if coin.unlimited:
            factor = substitute_monomial(geometric(order), 1, coin.value)
        else:
            factor = series_from(coin_factor(coin).coefficients, order)
        result = series_mul(result, factor)
    return result


def ways_to_pay(coins: Sequence[CoinSpec], amount: int) -> int:
    if amount < 0:
        raise ValueError(f"amount must be nonnegative, got {amount}")
    series = coin_change_poly(coins, order=amount)
    logger.debug("Change-making series for %d coin kinds through x^%d", len(coins), amount)
    return int(series[amount])


def _product_coefficient(factors: list[TruncatedSeries], n: int, order: int) -> int:
    result = one(order)
    for factor in factors:
        result = series_mul(result, factor)
    return int(result[n])


def partition_count(n: int, order: int | None = None) -> int:
    """Coefficient of x^n in prod_{k=1..n} 1/(1 - x^k)."""
    order = n if order is None else order
    if order < n:
        raise ValueError(f"truncation order {order} is below n={n}")
    if n == 0:
        return 1
    return _product_coefficient(
        [substitute_monomial(geometric(order), 1, k) for k in range(1, n + 1)], n, order
    )


def distinct_parts_count(n: int) -> int:
    """Partitions of n into distinct parts: coefficient of x^n in prod (1 + x^k)."""
    if n == 0:
        return 1
    return _product_coefficient([series_from([1] + [0] * (k - 1) + [1], n) for k in range(1, n + 1)], n, n)


def odd_parts_count(n: int) -> int:
    """Partitions of n into odd parts: coefficient of x^n in prod over odd k of 1/(1 - x^k)."""
    if n == 0:
        return 1
    return _product_coefficient(
        [substitute_monomial(geometric(n), 1, k) for k in range(1, n + 1, 2)], n, n
    )
