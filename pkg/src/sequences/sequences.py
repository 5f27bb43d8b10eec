import logging
import math
from dataclasses import dataclass

from errors.errors import PrecisionWindowExceeded, SizeCapExceeded

logger = logging.getLogger(__name__)

BINET_WINDOW = 70
HANOI_MOVES_CAP = 12

type HanoiMove = tuple[int, int, int]


def _require_natural(name: str, value: int) -> None:
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")


def fibonacci(n: int) -> int:
    """F_n with F_0 = 0, F_1 = F_2 = 1."""
    _require_natural("n", n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    """L_n with L_0 = 2, L_1 = 1."""
    _require_natural("n", n)
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fibonacci_binet(n: int) -> float:
    """(phi^n - psi^n) / sqrt(5) in double precision."""
    _require_natural("n", n)
    if n > BINET_WINDOW:
        raise PrecisionWindowExceeded(f"n={n} is beyond the double precision window n <= {BINET_WINDOW}")
    root5 = math.sqrt(5)
    phi = (1 + root5) / 2
    psi = (1 - root5) / 2
    return (phi**n - psi**n) / root5


@dataclass(frozen=True)
class StairRule:
    """Allowed step sizes when climbing a staircase."""

    steps: frozenset[int]

    def __init__(self, steps):
        steps = frozenset(steps)
        if not steps:
            raise ValueError("at least one step size is required")
        if any(s <= 0 for s in steps):
            raise ValueError(f"step sizes must be positive, got {sorted(steps)}")
        object.__setattr__(self, "steps", steps)


def stair_ways(n: int, rule: StairRule) -> int:
    """Ordered compositions of n into allowed parts; 1 for n = 0."""
    _require_natural("n", n)
    ways = [1] + [0] * n
    for i in range(1, n + 1):
        ways[i] = sum(ways[i - s] for s in rule.steps if s <= i)
    return ways[n]


def hanoi_count(n: int) -> int:
    """H_n = 2 H_{n-1} + 1 = 2^n - 1."""
    _require_natural("n", n)
    return 2**n - 1


def hanoi_moves(n: int, source: int = 0, target: int = 2) -> list[HanoiMove]:
    """Moves (disk, from_peg, to_peg) taking a tower of n disks from source to target.

    Disks are numbered 1 (smallest) to n.
    """
    _require_natural("n", n)
    if n > HANOI_MOVES_CAP:
        raise SizeCapExceeded(f"move listing is capped at {HANOI_MOVES_CAP} disks, got {n}")
    if {source, target} - {0, 1, 2} or source == target:
        raise ValueError(f"source and target must be distinct pegs in 0..2, got {source}, {target}")

    moves: list[HanoiMove] = []

    def move_tower(disks: int, start: int, end: int, spare: int) -> None:
        if disks == 0:
            return
        move_tower(disks - 1, start, spare, end)
        moves.append((disks, start, end))
        move_tower(disks - 1, spare, end, start)

    move_tower(n, source, target, 3 - source - target)
    return moves


def plane_regions(n: int) -> int:
    """Regions cut out by n lines in general position: (n^2 + n + 2) / 2."""
    _require_natural("n", n)
    return (n * n + n + 2) // 2


def plane_regions_recurrence(n: int) -> int:
    """P_0 = 1, P_n = P_{n-1} + n."""
    _require_natural("n", n)
    value = 1
    for i in range(1, n + 1):
        value += i
    return value


def circle_regions(n: int) -> int:
    """Regions cut out by n circles, each pair meeting twice: n^2 - n + 2."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return n * n - n + 2


def circle_regions_recurrence(n: int) -> int:
    """a_1 = 2, a_n = a_{n-1} + 2(n-1)."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    value = 2
    for i in range(2, n + 1):
        value += 2 * (i - 1)
    return value


def dyck_paths(n: int) -> list[str]:
    """All Dyck words of semilength n over U (up) and D (down)."""
    _require_natural("n", n)
    paths: list[str] = []

    def extend(prefix: str, ups: int, downs: int) -> None:
        if ups == n and downs == n:
            paths.append(prefix)
            return
        if ups < n:
            extend(prefix + "U", ups + 1, downs)
        if downs < ups:
            extend(prefix + "D", ups, downs + 1)

    extend("", 0, 0)
    return paths
