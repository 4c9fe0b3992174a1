"""Weighted unit-square MIS via per-strip weight classes.

Weights are rounded up to powers of (1 + eps). Each strip keeps a
leftmost/rightmost summary for each of its heaviest few classes, plus its
single heaviest square. Lighter classes are dropped once a class more than
a factor 1/eps heavier appears, because they cannot move the strip optimum
by more than that factor.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from ..core.geometry import Ball, BallStream
from ..core.streams import BallArrival, StreamData, as_events
from ..errors import GeometryError, StreamError
from .space import SpaceAccount
from .strips import SquareFrame, StripSummary, _check_unit, partition_shifts


class WeightedResult(NamedTuple):
    selected: tuple[int, ...]
    weight: int
    space: SpaceAccount


def classes_kept(eps: float) -> int:
    """Number of weight classes retained per strip: ceil(log_{1+eps}(1/eps)) + 1."""
    return math.ceil(math.log(1 / eps) / math.log1p(eps) - 1e-12) + 1


class WeightClasser:
    """Exact ``ceil(log_{1+eps} w)`` using rational arithmetic for the boundary cases."""

    def __init__(self, eps: float):
        self.base = 1 + Fraction(eps)
        self._float_base = math.log1p(eps)
        self.of = lru_cache(maxsize=4096)(self._class_of)

    def _class_of(self, w: int) -> int:
        if w < 1:
            raise GeometryError(f"weights must be positive integers, got {w}")
        c = max(0, math.ceil(math.log(w) / self._float_base))
        while self.base ** c < w:
            c += 1
        while c > 0 and self.base ** (c - 1) >= w:
            c -= 1
        return c


class _WeightedStrip:
    __slots__ = ("classes", "heavy", "heavy_id", "top", "count")

    def __init__(self):
        self.classes: dict[int, StripSummary] = {}
        self.heavy: Ball | None = None
        self.heavy_id = -1
        self.top = -1
        self.count = 0

    def recount(self) -> int:
        seen = set()
        for s in self.classes.values():
            seen.add(id(s.leftmost))
            seen.add(id(s.rightmost))
        if self.heavy is not None:
            seen.add(id(self.heavy))
        return len(seen)

    def candidates(self) -> list[tuple[int, Ball]]:
        out = {}
        for s in self.classes.values():
            out[s.left_id] = s.leftmost
            out[s.right_id] = s.rightmost
        if self.heavy is not None:
            out[self.heavy_id] = self.heavy
        return sorted(out.items())

    def solve(self, w: int) -> tuple[int, tuple[int, ...]]:
        cands = self.candidates()
        best = (self.heavy.weight, (self.heavy_id,))
        for i, (a, ba) in enumerate(cands):
            for b, bb in cands[i + 1:]:
                if abs(ba.center[0] - bb.center[0]) > w:
                    total = ba.weight + bb.weight
                    if total > best[0]:
                        best = (total, tuple(sorted((a, b))))
        return best


class WeightedStripDecomposition:
    def __init__(self, eps: float, p="linf"):
        if not 0 < eps <= 1:
            raise ValueError(f"eps must lie in (0, 1], got {eps}")
        self.eps = eps
        self.keep = classes_kept(eps)
        self.classer = WeightClasser(eps)
        self.frame = SquareFrame(p)
        self.space = SpaceAccount()
        self.consumed = 0
        self.strips: list[dict[tuple[int, int], _WeightedStrip]] = [{} for _ in range(6)]
        self._shifts = None

    def process(self, event):
        if not isinstance(event, BallArrival):
            raise StreamError("weighted strip decomposition consumes ball arrivals only")
        vid = self.consumed
        self.consumed += 1
        if event.ball.weight < 1:
            raise GeometryError(f"nonpositive weight {event.ball.weight} at position {vid}")
        b = self.frame(event.ball)
        if self._shifts is None:
            self._shifts = partition_shifts(self.frame.w)
        w = self.frame.w
        r = b.radius
        cx, cy = b.center
        c = self.classer.of(b.weight)
        for t, (sx, sy) in enumerate(self._shifts):
            ix = (cx - r - sx) // (3 * w)
            if cx + r >= sx + 3 * w * (ix + 1):
                continue
            iy = (cy - r - sy) // (2 * w)
            if cy + r >= sy + 2 * w * (iy + 1):
                continue
            table = self.strips[t]
            strip = table.get((ix, iy))
            if strip is None:
                strip = table[(ix, iy)] = _WeightedStrip()
            self._offer(strip, b, vid, c)

    def _offer(self, strip: _WeightedStrip, b: Ball, vid: int, c: int):
        if strip.heavy is None or b.weight > strip.heavy.weight:
            strip.heavy, strip.heavy_id = b, vid
        if c > strip.top:
            strip.top = c
            floor = c - self.keep + 1
            for old in [k for k in strip.classes if k < floor]:
                del strip.classes[old]
        if c >= strip.top - self.keep + 1:
            summary = strip.classes.get(c)
            if summary is None:
                strip.classes[c] = StripSummary.of(b, vid)
            else:
                summary.offer(b, vid)
        after = strip.recount()
        if after > strip.count:
            self.space.add(after - strip.count)
        elif after < strip.count:
            self.space.discard(strip.count - after)
        strip.count = after

    def result(self) -> WeightedResult:
        best = (0, ())
        if self._shifts is not None:
            w = self.frame.w
            for table in self.strips:
                total, chosen = 0, []
                for key in sorted(table):
                    wt, ids = table[key].solve(w)
                    total += wt
                    chosen.extend(ids)
                if total > best[0]:
                    best = (total, tuple(sorted(chosen)))
        return WeightedResult(best[1], best[0], self.space)


def weighted_unit_square_3eps(source, eps: float) -> WeightedResult:
    """Approximate maximum-weight independent set of a weighted unit-square stream."""
    if isinstance(source, StreamData):
        source = source.ball_stream()
    if not isinstance(source, BallStream):
        raise StreamError("weighted_unit_square_3eps needs a BallStream")
    _check_unit(source)
    for i, b in enumerate(source.balls):
        if b.weight < 1:
            raise GeometryError(f"nonpositive weight {b.weight} at position {i}")
    algo = WeightedStripDecomposition(eps, source.p)
    for e in as_events(source):
        algo.process(e)
    return algo.result()


def weighted_space_bound(alpha: int, eps: float) -> int:
    """Concrete retained-square bound: 6 shifts x alpha strips x (2 per kept class + heaviest)."""
    return 6 * alpha * (2 * classes_kept(eps) + 1)
