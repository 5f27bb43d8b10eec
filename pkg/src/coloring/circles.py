from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from errors.errors import BoundaryPoint

type Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Circle:
    x: Fraction
    y: Fraction
    radius: Fraction

    def __post_init__(self):
        for name in ("x", "y", "radius"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.radius <= 0:
            raise ValueError(f"radius must be positive, got {self.radius}")

    def side(self, point: Sequence[Fraction | int]) -> int:
        """-1 inside, 0 on the circle, 1 outside; exact."""
        dx, dy = Fraction(point[0]) - self.x, Fraction(point[1]) - self.y
        gap = dx * dx + dy * dy - self.radius * self.radius
        return (gap > 0) - (gap < 0)


@dataclass(frozen=True)
class CircleArrangement:
    circles: tuple[Circle, ...]

    @classmethod
    def of(cls, *circles: tuple[Fraction | int, Fraction | int, Fraction | int]) -> "CircleArrangement":
        return cls(tuple(Circle(*c) for c in circles))


def circle_region_color(point: Sequence[Fraction | int], arrangement: CircleArrangement) -> int:
    """Parity of the number of circles strictly containing the point.

    Regions on opposite sides of a single arc differ in exactly one
    containment, so neighboring regions always get different colors.
    """
    inside = 0
    for circle in arrangement.circles:
        side = circle.side(point)
        if side == 0:
            raise BoundaryPoint(f"({point[0]}, {point[1]}) lies on the circle centered at ({circle.x}, {circle.y})")
        inside += side < 0
    return inside % 2
