"""Seeded random and planted instances for trials and tests."""

from __future__ import annotations

import math
import random

from ..core.geometry import Ball, BallStream
from ..core.streams import StreamData, VertexArrival


def random_vertex_stream(n: int, density: float, rng: random.Random) -> StreamData:
    """Erdos-Renyi graph as an explicit vertex stream in id order."""
    events = []
    for v in range(n):
        events.append(VertexArrival(v, frozenset(u for u in range(v) if rng.random() < density)))
    return StreamData("vertex", events)


def random_unit_intervals(n: int, length: int, rng: random.Random, r: int = 2) -> BallStream:
    """``n`` closed intervals of radius ``r`` with integer centres in [r, length - r]."""
    balls = [Ball((rng.randint(r, length - r),), r) for _ in range(n)]
    return BallStream("linf", 1, length + 1, balls)


def random_unit_squares(n: int, box: int, rng: random.Random, r: int = 1, p="linf",
                        max_weight: int | None = None) -> BallStream:
    """``n`` squares of radius ``r`` with centres uniform in [r, box - r]^2.

    ``max_weight`` draws integer weights uniformly from [1, max_weight].
    """
    balls = []
    for _ in range(n):
        c = (rng.randint(r, box - r), rng.randint(r, box - r))
        w = rng.randint(1, max_weight) if max_weight else 1
        balls.append(Ball(c, r, w))
    return BallStream(p, 2, box + 1, balls, weighted=max_weight is not None)


def planted_squares(alpha: int, rng: random.Random, layout: str = "random", max_cluster: int = 3,
                    r: int = 2) -> tuple[BallStream, int]:
    """Unit squares whose independence number is exactly ``alpha``.

    Each of ``alpha`` clusters is a set of squares all containing a common
    point (so a clique) and clusters are more than 2w apart (so no edges
    between them). ``layout`` picks where the clusters sit:

    - ``aligned``: every cell of a square grid of pitch 3w, no jitter
    - ``random``: random cells of a sparser grid, with jitter
    - ``sparse``: like ``random`` but every cluster is a single square
    """
    w = 2 * r
    pitch = 3 * w
    jitter = w // 2 - 1
    if layout == "aligned":
        side = math.ceil(math.sqrt(alpha))
        cells = [divmod(t, side) for t in range(alpha)]
        jitter = 0
    elif layout in ("random", "sparse"):
        side = math.ceil(math.sqrt(2 * alpha))
        cells = [divmod(t, side) for t in rng.sample(range(side * side), alpha)]
    else:
        raise ValueError(f"unknown layout {layout!r}")
    size_cap = 1 if layout == "sparse" else max_cluster
    balls = []
    for ix, iy in cells:
        qx = pitch * ix + w + rng.randint(-jitter, jitter)
        qy = pitch * iy + w + rng.randint(-jitter, jitter)
        for _ in range(rng.randint(1, size_cap)):
            balls.append(Ball((qx + rng.randint(-r, r), qy + rng.randint(-r, r)), r))
    rng.shuffle(balls)
    return BallStream("linf", 2, pitch * side + 2 * w, balls), alpha
