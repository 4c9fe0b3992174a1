"""Integer-lattice l^p balls and their intersection graphs.

All arithmetic is exact: l2 tests compare squared distances against the
squared radius sum, so no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import GeometryError
from .graph import Graph

NORMS = ("l1", "l2", "linf")

_ALIASES = {
    "l1": "l1", "1": "l1", 1: "l1",
    "l2": "l2", "2": "l2", 2: "l2",
    "linf": "linf", "inf": "linf", "l_inf": "linf", "max": "linf",
}


def norm_tag(p) -> str:
    """Normalise a norm designation (``1``, ``"inf"``, ``"linf"``, ...) to one of :data:`NORMS`."""
    key = p.lower() if isinstance(p, str) else p
    try:
        return _ALIASES[key]
    except (KeyError, TypeError):
        raise GeometryError(f"unknown norm tag {p!r}") from None


@dataclass(frozen=True)
class Ball:
    """Closed ball with an integer centre and integer radius.

    ``weight`` is only consulted by the weighted strip algorithm; unweighted
    streams leave it at 1.
    """

    center: tuple[int, ...]
    radius: int
    weight: int = 1

    def __post_init__(self):
        center = tuple(self.center)
        object.__setattr__(self, "center", center)
        if not 1 <= len(center) <= 3:
            raise GeometryError(f"dimension {len(center)} unsupported (1 <= d <= 3)")
        if any(not isinstance(c, int) for c in center) or not isinstance(self.radius, int):
            raise GeometryError("ball coordinates and radius must be integers")
        if self.radius < 1:
            raise GeometryError(f"radius must be >= 1, got {self.radius}")
        if not isinstance(self.weight, int):
            raise GeometryError("ball weight must be an integer")

    @property
    def d(self) -> int:
        return len(self.center)


def intersects(b1: Ball, b2: Ball, p) -> bool:
    """Closed-ball intersection test: ``||c1 - c2||_p <= r1 + r2`` (touching counts)."""
    if b1.d != b2.d:
        raise GeometryError(f"dimension mismatch: {b1.d} vs {b2.d}")
    p = norm_tag(p)
    reach = b1.radius + b2.radius
    if p == "linf":
        return all(abs(x - y) <= reach for x, y in zip(b1.center, b2.center))
    if p == "l1":
        return sum(abs(x - y) for x, y in zip(b1.center, b2.center)) <= reach
    return sum((x - y) ** 2 for x, y in zip(b1.center, b2.center)) <= reach * reach


@dataclass(frozen=True)
class BallStream:
    """An ordered implicit vertex stream of balls in ``[M]^d`` under norm ``p``."""

    p: str
    d: int
    M: int
    balls: tuple[Ball, ...]
    weighted: bool = False

    def __post_init__(self):
        object.__setattr__(self, "p", norm_tag(self.p))
        object.__setattr__(self, "balls", tuple(self.balls))
        if not 1 <= self.d <= 3:
            raise GeometryError(f"dimension {self.d} unsupported (1 <= d <= 3)")
        if self.M < 2:
            raise GeometryError("domain bound M must be at least 2")
        for i, b in enumerate(self.balls):
            if b.d != self.d:
                raise GeometryError(f"ball {i} has dimension {b.d}, stream has d={self.d}")
            if any(not 0 <= c < self.M for c in b.center):
                raise GeometryError(f"ball {i} centre {b.center} outside [0, {self.M})")
            if not 1 <= b.radius < self.M:
                raise GeometryError(f"ball {i} radius {b.radius} outside [1, {self.M})")
            if self.weighted and b.weight < 1:
                raise GeometryError(f"ball {i} has nonpositive weight {b.weight}")

    def __len__(self):
        return len(self.balls)

    def __iter__(self):
        return iter(self.balls)

    @property
    def dilation(self) -> Fraction:
        """r_max / r_min; 1 for a unit-ball stream. Empty streams count as unit."""
        if not self.balls:
            return Fraction(1)
        radii = [b.radius for b in self.balls]
        return Fraction(max(radii), min(radii))

    @property
    def is_unit(self) -> bool:
        return self.dilation == 1

    @property
    def max_weight(self) -> int:
        return max((b.weight for b in self.balls), default=0)


def intersection_graph(s: BallStream | Sequence[Ball], p=None) -> Graph:
    """Vertex ``i`` is ball ``i`` in arrival order; edges from pairwise :func:`intersects`."""
    if isinstance(s, BallStream):
        balls, p = s.balls, s.p
    else:
        if p is None:
            raise GeometryError("a norm tag is required for a bare ball sequence")
        balls = tuple(s)
    p = norm_tag(p)
    n = len(balls)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if intersects(balls[i], balls[j], p)
    ]
    return Graph.from_edges(n, edges)


def rotate_l1_to_linf(b: Ball, offset: int = 0) -> Ball:
    """Map a planar l1 ball to the l-infinity ball with the same intersection pattern.

    Uses (x, y) -> (x + y, x - y + offset); l1 distances become l-infinity
    distances exactly, so radii are unchanged.
    """
    if b.d != 2:
        raise GeometryError("l1 -> l-infinity rotation is defined for d = 2 only")
    x, y = b.center
    return Ball((x + y, x - y + offset), b.radius, b.weight)


def total_weight(balls: Iterable[Ball]) -> int:
    return sum(b.weight for b in balls)
