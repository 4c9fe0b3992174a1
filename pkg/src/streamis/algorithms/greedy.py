"""One-pass greedy maximal independent set for vertex-arrival streams."""

from __future__ import annotations

from typing import NamedTuple

from ..core.geometry import Ball, BallStream, intersects, norm_tag
from ..core.streams import BallArrival, EdgeArrival, StreamData, VertexArrival, as_events
from ..errors import StreamError
from .space import SpaceAccount


class MISResult(NamedTuple):
    selected: tuple[int, ...]
    space: SpaceAccount


class GreedyMIS:
    """Keeps each arriving vertex iff it has no neighbour among those already kept.

    Works on explicit vertex arrivals directly and on ball arrivals through
    the intersection test for norm ``p``. Only the kept vertices are stored.
    """

    def __init__(self, p=None):
        self.p = norm_tag(p) if p is not None else None
        self.space = SpaceAccount()
        self.selected: list[int] = []
        self._members: set[int] = set()
        self._balls: list[Ball] = []
        self.consumed = 0

    def process(self, event):
        if isinstance(event, EdgeArrival):
            raise StreamError("greedy MIS is undefined on edge-arrival streams")
        pos = self.consumed
        self.consumed += 1
        if isinstance(event, VertexArrival):
            if event.id != pos:
                raise StreamError(f"vertex arrival {pos} has id {event.id}")
            if event.back_neighbors.isdisjoint(self._members):
                self._members.add(event.id)
                self.selected.append(event.id)
                self.space.add()
        elif isinstance(event, BallArrival):
            if self.p is None:
                raise StreamError("greedy on a ball stream needs a norm tag")
            b = event.ball
            if not any(intersects(b, kept, self.p) for kept in self._balls):
                self._balls.append(b)
                self.selected.append(pos)
                self.space.add()
        else:
            raise StreamError(f"unsupported stream event {event!r}")

    def result(self) -> MISResult:
        return MISResult(tuple(self.selected), self.space)


def greedy_mis(source, p=None) -> MISResult:
    """Run greedy over a vertex stream, a ball stream, or a :class:`StreamData`."""
    if isinstance(source, BallStream):
        p = source.p
    elif isinstance(source, StreamData):
        if source.model == "edge":
            raise StreamError("greedy MIS is undefined on edge-arrival streams")
        p = source.p
    algo = GreedyMIS(p)
    for e in as_events(source):
        algo.process(e)
    return algo.result()
