"""Small-space (3 + eps)-estimate of alpha for unit square streams.

For each shifted partition the estimate is (number of nonempty strips) x
(average strip optimum). The first factor is a distinct-elements count and
the second an average over a uniform sample of nonempty strips. A single
bottom-k sketch over strip keys supplies both: the k-th smallest hash
estimates the count, and the retained strips form the sample, each with an
exact leftmost/rightmost summary.
"""

from __future__ import annotations

import heapq
import math
import struct
from hashlib import blake2b
from typing import NamedTuple

from ..core.geometry import BallStream
from ..core.streams import BallArrival, StreamData, as_events
from ..errors import StreamError
from .space import SpaceAccount
from .strips import SquareFrame, StripSummary, _check_unit, partition_shifts, strip_solve_ids

HASH_SPACE = 1 << 64


def sketch_size(eps: float) -> int:
    return math.ceil(48 / eps ** 2)


def _check_eps(eps: float):
    if not 0 < eps <= 1:
        raise ValueError(f"eps must lie in (0, 1], got {eps}")


class BottomKSketch:
    """Keeps the ``k`` strip keys with the smallest hashes, each with its exact summary."""

    def __init__(self, k: int, seed: int, salt: int = 0):
        if k < 2:
            raise ValueError("bottom-k sketch needs k >= 2")
        self.k = k
        self._hkey = struct.pack("<qq", seed, salt)
        self.retained: dict[tuple[int, int], list] = {}  # key -> [hash, summary]
        self._heap: list[tuple[int, tuple[int, int]]] = []  # (-hash, key)
        self.saturated = False

    def hash(self, key: tuple[int, int]) -> int:
        digest = blake2b(struct.pack("<qq", *key), digest_size=8, key=self._hkey).digest()
        return int.from_bytes(digest, "little")

    def offer(self, key, ball, vid: int) -> int:
        """Fold one square into the sketch; returns the change in retained entries."""
        entry = self.retained.get(key)
        if entry is not None:
            entry[1].offer(ball, vid)
            return 0
        h = self.hash(key)
        if len(self.retained) < self.k:
            self.retained[key] = [h, StripSummary.of(ball, vid)]
            heapq.heappush(self._heap, (-h, key))
            return 1
        self.saturated = True
        if h >= -self._heap[0][0]:
            return 0
        _, evicted = heapq.heapreplace(self._heap, (-h, key))
        del self.retained[evicted]
        self.retained[key] = [h, StripSummary.of(ball, vid)]
        return 0

    def distinct_estimate(self) -> float:
        """Exact count until the sketch has overflowed, then (k - 1) / u_k."""
        if not self.saturated:
            return float(len(self.retained))
        kth = -self._heap[0][0]
        return (self.k - 1) / ((kth + 1) / HASH_SPACE)

    def mean_strip_optimum(self, w: int) -> float:
        if not self.retained:
            return 0.0
        return sum(len(strip_solve_ids(s, w)) for _, s in self.retained.values()) / len(self.retained)


class EstimateResult(NamedTuple):
    estimate: float
    space: SpaceAccount


class AlphaEstimator:
    """Streaming estimator; ``scale`` divides the max-over-shifts estimate.

    The default scale ``sqrt(1 + eps/3)`` splits the slack evenly between
    overestimation (the output must not exceed alpha) and underestimation
    (the best shift is only guaranteed to hold alpha/3).
    """

    def __init__(self, eps: float, seed: int = 0, p="linf", k: int | None = None,
                 scale: float | None = None):
        _check_eps(eps)
        self.eps = eps
        self.k = sketch_size(eps) if k is None else k
        self.scale = math.sqrt(1 + eps / 3) if scale is None else scale
        self.frame = SquareFrame(p)
        self.sketches = [BottomKSketch(self.k, seed, salt=t) for t in range(6)]
        self.space = SpaceAccount(registers=2 * 6)
        self.consumed = 0
        self._shifts = None

    def process(self, event):
        if not isinstance(event, BallArrival):
            raise StreamError("the estimator consumes ball arrivals only")
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
            if self.sketches[t].offer((ix, iy), b, vid) > 0:
                self.space.add()

    def shift_estimates(self) -> list[float]:
        if self._shifts is None:
            return [0.0] * 6
        w = self.frame.w
        return [s.distinct_estimate() * s.mean_strip_optimum(w) for s in self.sketches]

    def result(self) -> EstimateResult:
        return EstimateResult(max(self.shift_estimates()) / self.scale, self.space)


def alpha_estimator_3eps(source, eps: float, seed: int = 0, **kwargs) -> EstimateResult:
    """One-sided (3 + eps)-approximation of alpha for a unit l1 / l-infinity ball stream."""
    _check_eps(eps)
    if isinstance(source, StreamData):
        source = source.ball_stream()
    if not isinstance(source, BallStream):
        raise StreamError("alpha_estimator_3eps needs a BallStream")
    _check_unit(source)
    algo = AlphaEstimator(eps, seed, source.p, **kwargs)
    for e in as_events(source):
        algo.process(e)
    return algo.result()
