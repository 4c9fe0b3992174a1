"""Shifted strip decomposition for unit squares (3-approximate MIS).

The plane is cut into half-open ``3w x 2w`` strips, ``w`` being the square
side. Inside one strip at most two disjoint squares fit, and the leftmost
and rightmost squares seen always realise the optimum, so each strip keeps
two squares. Six shifted copies of the partition are run side by side and
the best one is reported. Every square lies fully inside a strip in exactly
two of the six copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from ..core.geometry import Ball, BallStream, norm_tag, rotate_l1_to_linf
from ..core.streams import BallArrival, StreamData, as_events
from ..errors import GeometryError, StreamError
from .greedy import MISResult
from .space import SpaceAccount


class PartitionShift(NamedTuple):
    sx: int
    sy: int


class StripKey(NamedTuple):
    shift: PartitionShift
    ix: int
    iy: int


def partition_shifts(w: int) -> tuple[PartitionShift, ...]:
    """The six partition offsets: 0, w, 2w horizontally times 0, w vertically."""
    return tuple(PartitionShift(sx, sy) for sx in (0, w, 2 * w) for sy in (0, w))


def _check_side(w: int):
    if w < 2 or w % 2:
        raise GeometryError(f"square side w must be even and >= 2, got {w}")


def strip_assign(b: Ball, shift: PartitionShift, w: int) -> StripKey | None:
    """The strip of this partition that fully contains square ``b``, if any.

    Strips are closed on the left/bottom and open on the right/top, so a
    square touching a strip's right edge does not fit.
    """
    _check_side(w)
    if b.d != 2:
        raise GeometryError("strip decomposition needs planar squares")
    if 2 * b.radius != w:
        raise GeometryError(f"square radius {b.radius} does not match side {w}")
    r = b.radius
    cx, cy = b.center
    ix = (cx - r - shift.sx) // (3 * w)
    if cx + r >= shift.sx + 3 * w * (ix + 1):
        return None
    iy = (cy - r - shift.sy) // (2 * w)
    if cy + r >= shift.sy + 2 * w * (iy + 1):
        return None
    return StripKey(shift, ix, iy)


@dataclass
class StripSummary:
    """Leftmost and rightmost square seen inside one strip, with their vertex ids.

    Ties on the x coordinate keep the square seen first.
    """

    leftmost: Ball
    rightmost: Ball
    left_id: int = -1
    right_id: int = -1

    @classmethod
    def of(cls, b: Ball, vid: int = -1) -> "StripSummary":
        return cls(b, b, vid, vid)

    @property
    def retained(self) -> int:
        return 1 if self.leftmost is self.rightmost else 2

    def offer(self, b: Ball, vid: int = -1) -> int:
        """Fold in a new square; returns the change in retained square count."""
        before = self.retained
        x = b.center[0]
        if x < self.leftmost.center[0]:
            self.leftmost, self.left_id = b, vid
        elif x > self.rightmost.center[0]:
            self.rightmost, self.right_id = b, vid
        return self.retained - before


def _disjoint_in_strip(s: StripSummary, w: int) -> bool:
    # squares inside one strip are vertically within w of each other, so only x decides
    return s.rightmost.center[0] - s.leftmost.center[0] > w


def strip_solve(s: StripSummary, w: int) -> tuple[Ball, ...]:
    """Maximum independent set among the squares summarised by ``s``."""
    if _disjoint_in_strip(s, w):
        return (s.leftmost, s.rightmost)
    return (s.leftmost,)


def strip_solve_ids(s: StripSummary, w: int) -> tuple[int, ...]:
    if _disjoint_in_strip(s, w):
        return (s.left_id, s.right_id)
    return (s.left_id,)


class SquareFrame:
    """Moves unit l1 / l-infinity balls into the l-infinity frame the strips work in."""

    def __init__(self, p):
        self.p = norm_tag(p)
        if self.p not in ("l1", "linf"):
            raise GeometryError(f"strip decomposition supports l1 and linf, not {self.p}")
        self.radius: int | None = None

    def __call__(self, b: Ball) -> Ball:
        if b.d != 2:
            raise GeometryError("strip decomposition needs a planar (d = 2) stream")
        if self.radius is None:
            self.radius = b.radius
        elif b.radius != self.radius:
            raise GeometryError(
                f"dilation != 1: radius {b.radius} after radius {self.radius}")
        return rotate_l1_to_linf(b) if self.p == "l1" else b

    @property
    def w(self) -> int:
        return 2 * self.radius


def _check_unit(stream: BallStream):
    if stream.d != 2:
        raise GeometryError("strip decomposition needs a planar (d = 2) stream")
    if not stream.is_unit:
        raise GeometryError(f"strip decomposition needs dilation 1, got {stream.dilation}")


class StripDecomposition:
    """Streaming 3-approximate MIS for unit squares (or unit l1 diamonds).

    Retained squares are charged to ``space``; at most two per nonempty
    strip per shift.
    """

    def __init__(self, p="linf"):
        self.frame = SquareFrame(p)
        self.space = SpaceAccount()
        self.consumed = 0
        self.strips: list[dict[tuple[int, int], StripSummary]] = [{} for _ in range(6)]
        self._shifts: tuple[PartitionShift, ...] | None = None

    def process(self, event):
        if not isinstance(event, BallArrival):
            raise StreamError("strip decomposition consumes ball arrivals only")
        vid = self.consumed
        self.consumed += 1
        b = self.frame(event.ball)
        if self._shifts is None:
            self._shifts = partition_shifts(self.frame.w)
        w = self.frame.w
        r = b.radius
        cx, cy = b.center
        for t, (sx, sy) in enumerate(self._shifts):
            ix = (cx - r - sx) // (3 * w)
            if cx + r >= sx + 3 * w * (ix + 1):
                continue
            iy = (cy - r - sy) // (2 * w)
            if cy + r >= sy + 2 * w * (iy + 1):
                continue
            table = self.strips[t]
            summary = table.get((ix, iy))
            if summary is None:
                table[(ix, iy)] = StripSummary.of(b, vid)
                self.space.add()
            else:
                delta = summary.offer(b, vid)
                if delta > 0:
                    self.space.add(delta)

    def shift_solutions(self) -> list[tuple[int, ...]]:
        """Union of per-strip optima for each of the six shifts."""
        if self._shifts is None:
            return [() for _ in range(6)]
        w = self.frame.w
        out = []
        for table in self.strips:
            chosen: list[int] = []
            for key in sorted(table):
                chosen.extend(strip_solve_ids(table[key], w))
            out.append(tuple(sorted(chosen)))
        return out

    def result(self) -> MISResult:
        best: tuple[int, ...] = ()
        for sol in self.shift_solutions():
            if len(sol) > len(best):
                best = sol
        return MISResult(best, self.space)


def unit_square_mis_3approx(source) -> MISResult:
    """3-approximate MIS of a unit l1 / l-infinity ball stream in the plane."""
    if isinstance(source, StreamData):
        source = source.ball_stream()
    if not isinstance(source, BallStream):
        raise StreamError("unit_square_mis_3approx needs a BallStream")
    _check_unit(source)
    algo = StripDecomposition(source.p)
    for e in as_events(source):
        algo.process(e)
    return algo.result()


def shift_members(balls: Iterable[Ball], p, shift_index: int) -> list[int]:
    """Indices of the squares lying fully inside some strip of one shifted partition."""
    frame = SquareFrame(p)
    framed = [frame(b) for b in balls]
    if not framed:
        return []
    shift = partition_shifts(frame.w)[shift_index]
    return [i for i, b in enumerate(framed) if strip_assign(b, shift, frame.w) is not None]
