from itertools import product

import pytest
from pydantic import ValidationError

from genfunc.coins import (
    CoinSpec,
    coin_change_poly,
    coin_factor,
    distinct_parts_count,
    odd_parts_count,
    partition_count,
    ways_to_pay,
)
from genfunc.polynomial import Polynomial

WALLET = [CoinSpec.parse(text) for text in ("1x6", "5x2", "10x4", "25x3")]


def _brute_force(coins: list[CoinSpec], amount: int) -> int:
    ranges = [range(coin.max_count + 1) for coin in coins]
    return sum(
        1 for counts in product(*ranges) if sum(c * coin.value for c, coin in zip(counts, coins)) == amount
    )


class TestCoinSpec:
    def test_parse(self):
        assert CoinSpec.parse("25x3") == CoinSpec(value=25, max_count=3)
        assert CoinSpec.parse("1xinf").unlimited
        with pytest.raises(ValueError):
            CoinSpec.parse("25")

    def test_validation(self):
        with pytest.raises(ValidationError):
            CoinSpec(value=0, max_count=1)
        with pytest.raises(ValidationError):
            CoinSpec(value=1, max_count=-1)

    def test_factor(self):
        assert coin_factor(CoinSpec(value=5, max_count=2)) == Polynomial([1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1])
        with pytest.raises(ValueError):
            coin_factor(CoinSpec(value=5))


class TestChange:
    def test_pennies_and_nickels(self):
        poly = coin_change_poly([CoinSpec(value=1, max_count=6), CoinSpec(value=5, max_count=2)])
        assert poly.coefficient(6) == 2
        assert poly.degree == 16

    def test_wallet(self):
        assert ways_to_pay(WALLET, 100) == 5

    def test_galleons_sickles_knuts(self):
        pouch = [CoinSpec(value=1, max_count=3), CoinSpec(value=29, max_count=2), CoinSpec(value=493, max_count=2)]
        poly = coin_change_poly(pouch)
        assert set(poly.coefficients) <= {0, 1}
        assert sum(poly.coefficients) == 4 * 3 * 3

    def test_empty_purse(self):
        assert ways_to_pay([], 0) == 1
        assert ways_to_pay([], 3) == 0
        assert coin_change_poly([]) == Polynomial([1])

    def test_unlimited_coins(self):
        coins = [CoinSpec(value=1), CoinSpec(value=5)]
        assert ways_to_pay(coins, 10) == 3
        with pytest.raises(ValueError):
            coin_change_poly(coins)
        with pytest.raises(ValueError):
            ways_to_pay(coins, -1)

    @pytest.mark.parametrize("amount", [0, 7, 15, 23, 40])
    def test_matches_brute_force(self, amount):
        coins = [CoinSpec(value=1, max_count=5), CoinSpec(value=3, max_count=4), CoinSpec(value=7, max_count=3)]
        assert ways_to_pay(coins, amount) == _brute_force(coins, amount)


class TestPartitions:
    def test_known_values(self):
        assert [partition_count(n) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
        assert partition_count(30) == 5604
        assert partition_count(5, order=10) == 7
        with pytest.raises(ValueError):
            partition_count(5, order=3)

    def test_distinct_equals_odd(self):
        for n in range(31):
            assert distinct_parts_count(n) == odd_parts_count(n)
        assert distinct_parts_count(6) == 4
