"""Exhaustive Ramsey search over 2-colorings of the edges of K_n.

A coloring is stored as an integer counter: bit i is the color of the i-th
pair of ``itertools.combinations(range(n), 2)``.
"""

import logging
from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Optional

from config.config import load_config
from errors.errors import SizeCapExceeded
from workers.pool import run_partitioned, split_range

logger = logging.getLogger(__name__)

MAX_COLORED_PAIRS = 21


@cache
def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: i for i, pair in enumerate(combinations(range(n), 2))}


@dataclass(frozen=True)
class EdgeColoring2:
    n: int
    colors: tuple[int, ...]

    def __post_init__(self):
        pairs = self.n * (self.n - 1) // 2
        if len(self.colors) != pairs:
            raise ValueError(f"K_{self.n} has {pairs} edges, got {len(self.colors)} colors")
        if any(c not in (0, 1) for c in self.colors):
            raise ValueError("colors must be 0 or 1")

    @classmethod
    def from_counter(cls, n: int, counter: int) -> "EdgeColoring2":
        pairs = n * (n - 1) // 2
        return cls(n, tuple((counter >> i) & 1 for i in range(pairs)))

    @property
    def counter(self) -> int:
        return sum(c << i for i, c in enumerate(self.colors))

    def color(self, u: int, v: int) -> int:
        return self.colors[pair_index(self.n)[(min(u, v), max(u, v))]]

    def edges_of(self, color: int) -> list[tuple[int, int]]:
        return [pair for pair, i in pair_index(self.n).items() if self.colors[i] == color]


def mono_clique(coloring: EdgeColoring2, m: int, color: int) -> Optional[tuple[int, ...]]:
    """The first m-subset (lexicographically) whose pairs all carry ``color``."""
    if m < 1:
        raise ValueError(f"clique size must be at least 1, got {m}")
    for clique in combinations(range(coloring.n), m):
        if all(coloring.color(u, v) == color for u, v in combinations(clique, 2)):
            return clique
    return None


def _clique_masks(n: int, m: int) -> list[int]:
    index = pair_index(n)
    return [sum(1 << index[pair] for pair in combinations(clique, 2)) for clique in combinations(range(n), m)]


def _first_counterexample(job: tuple[int, int, int, int, int]) -> Optional[int]:
    """Lowest counter in [low, high) with no color-0 m1-clique and no color-1 m2-clique."""
    n, m1, m2, low, high = job
    zero_masks = _clique_masks(n, m1)
    one_masks = _clique_masks(n, m2)
    for counter in range(low, high):
        if any(counter & mask == 0 for mask in zero_masks):
            continue
        if any(counter & mask == mask for mask in one_masks):
            continue
        return counter
    return None


def _check_search_size(n: int, m1: int, m2: int) -> int:
    if n < 0 or m1 < 1 or m2 < 1:
        raise ValueError(f"need n >= 0 and clique sizes >= 1, got n={n}, m1={m1}, m2={m2}")
    pairs = n * (n - 1) // 2
    if pairs > MAX_COLORED_PAIRS:
        raise SizeCapExceeded(f"K_{n} has {pairs} edges; exhaustive search stops at {MAX_COLORED_PAIRS}")
    return pairs


def ramsey_witness(n: int, m1: int, m2: int) -> Optional[EdgeColoring2]:
    """A coloring of K_n avoiding both cliques, or None if every coloring has one."""
    pairs = _check_search_size(n, m1, m2)
    counter = _first_counterexample((n, m1, m2, 0, 1 << pairs))
    return None if counter is None else EdgeColoring2.from_counter(n, counter)


def ramsey_holds(n: int, m1: int, m2: int) -> bool:
    """Every 2-coloring of K_n has a color-0 m1-clique or a color-1 m2-clique."""
    return ramsey_witness(n, m1, m2) is None


async def ramsey_holds_parallel(n: int, m1: int, m2: int, workers: int | None = None) -> bool:
    pairs = _check_search_size(n, m1, m2)
    workers = load_config().workers if workers is None else workers
    jobs = [(n, m1, m2, low, high) for low, high in split_range(1 << pairs, workers)]
    results = await run_partitioned(_first_counterexample, jobs, workers)
    return all(found is None for found in results)


def ramsey_number(m1: int, m2: int, cap: int) -> int:
    """The least n <= cap for which ramsey_holds(n, m1, m2)."""
    for n in range(1, cap + 1):
        holds = ramsey_holds(n, m1, m2)
        logger.debug("R(%d, %d) search: n = %d %s", m1, m2, n, "holds" if holds else "fails")
        if holds:
            return n
    raise SizeCapExceeded(f"no n <= {cap} forces the cliques for R({m1}, {m2})")


async def ramsey_number_parallel(m1: int, m2: int, cap: int, workers: int | None = None) -> int:
    for n in range(1, cap + 1):
        if await ramsey_holds_parallel(n, m1, m2, workers):
            return n
    raise SizeCapExceeded(f"no n <= {cap} forces the cliques for R({m1}, {m2})")


def pentagon_coloring() -> EdgeColoring2:
    """K_5 with the pentagon in color 0 and the pentagram in color 1; no monochromatic triangle."""
    return EdgeColoring2(5, tuple(0 if (v - u) in (1, 4) else 1 for u, v in combinations(range(5), 2)))
