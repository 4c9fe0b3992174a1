"""The three arrival models and conversion of a stream into its graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from ..errors import StreamError
from .geometry import Ball, BallStream, intersection_graph, norm_tag
from .graph import Graph


@dataclass(frozen=True)
class EdgeArrival:
    u: int
    v: int


@dataclass(frozen=True)
class VertexArrival:
    """Vertex ``id`` arrives together with its edges to earlier vertices."""

    id: int
    back_neighbors: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "back_neighbors", frozenset(self.back_neighbors))


@dataclass(frozen=True)
class BallArrival:
    ball: Ball


StreamEvent = Union[EdgeArrival, VertexArrival, BallArrival]

_KIND = {EdgeArrival: "edge", VertexArrival: "vertex", BallArrival: "ball"}


def stream_kind(events: Sequence[StreamEvent]) -> str | None:
    """``"edge"``, ``"vertex"`` or ``"ball"``; None for an empty stream. Mixed kinds raise."""
    kinds = {_KIND.get(type(e)) for e in events}
    if None in kinds:
        raise StreamError("stream contains an object that is not a stream event")
    if len(kinds) > 1:
        raise StreamError(f"mixed event kinds in one stream: {sorted(kinds)}")
    return kinds.pop() if kinds else None


def materialize(events: Sequence[StreamEvent], *, n: int | None = None, p=None) -> Graph:
    """Build the graph a stream describes, enforcing the model's well-formedness rules.

    Edge streams take their vertex count from ``n`` (default: largest id + 1).
    Ball streams need the norm tag ``p``.
    """
    events = list(events)
    kind = stream_kind(events)
    if kind is None:
        return Graph.empty(n or 0)
    if kind == "edge":
        seen = set()
        top = -1
        for e in events:
            if e.u == e.v:
                raise StreamError(f"self-loop edge ({e.u}, {e.v})")
            if e.u < 0 or e.v < 0:
                raise StreamError(f"negative vertex id in edge ({e.u}, {e.v})")
            key = (min(e.u, e.v), max(e.u, e.v))
            if key in seen:
                raise StreamError(f"duplicate edge {key}")
            seen.add(key)
            top = max(top, e.u, e.v)
        count = top + 1 if n is None else n
        if top >= count:
            raise StreamError(f"edge endpoint {top} out of range for n={count}")
        return Graph.from_edges(count, seen)
    if kind == "vertex":
        edges = []
        for pos, e in enumerate(events):
            if e.id != pos:
                raise StreamError(f"vertex arrival {pos} has id {e.id}; ids must be dense in arrival order")
            for u in e.back_neighbors:
                if not 0 <= u < e.id:
                    raise StreamError(f"vertex {e.id} references {u}, which has not arrived")
                edges.append((u, e.id))
        if n is not None and n != len(events):
            raise StreamError(f"vertex stream has {len(events)} arrivals, expected n={n}")
        return Graph.from_edges(len(events), edges)
    if p is None:
        raise StreamError("materializing a ball stream requires a norm tag p")
    return intersection_graph([e.ball for e in events], norm_tag(p))


def complement_stream(events: Sequence[VertexArrival]) -> list[VertexArrival]:
    """Replace each arrival's back-neighbours by the earlier vertices it was *not* adjacent to."""
    events = list(events)
    if stream_kind(events) not in (None, "vertex"):
        raise StreamError("complement_stream needs an explicit vertex stream")
    out = []
    for pos, e in enumerate(events):
        if e.id != pos:
            raise StreamError(f"vertex arrival {pos} has id {e.id}")
        out.append(VertexArrival(e.id, frozenset(range(e.id)) - e.back_neighbors))
    return out


def vertex_stream(g: Graph, order: Sequence[int] | None = None) -> tuple[list[VertexArrival], list[int]]:
    """Present ``g`` as an explicit vertex stream in the given vertex order.

    Stream ids are dense arrival positions, so the second return value maps
    stream id -> original vertex.
    """
    order = list(range(g.n)) if order is None else list(order)
    if sorted(order) != list(range(g.n)):
        raise StreamError("order must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    events = [
        VertexArrival(i, frozenset(pos[u] for u in g.adj[v] if pos[u] < i))
        for i, v in enumerate(order)
    ]
    return events, order


def edge_stream(g: Graph) -> list[EdgeArrival]:
    return [EdgeArrival(u, v) for u, v in g.edges()]


def ball_events(s: BallStream) -> list[BallArrival]:
    return [BallArrival(b) for b in s.balls]


@dataclass(frozen=True)
class StreamData:
    """A stream together with the header information its model needs.

    ``model`` is ``"edge"``, ``"vertex"`` or ``"ball"``. Edge streams carry
    ``n``; ball streams carry ``p``, ``d``, ``M``.
    """

    model: str
    events: tuple[StreamEvent, ...]
    n: int | None = None
    p: str | None = None
    d: int | None = None
    M: int | None = None
    weighted: bool = False
    _graph: list = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        if self.model not in ("edge", "vertex", "ball"):
            raise StreamError(f"unknown stream model {self.model!r}")
        kind = stream_kind(self.events)
        if kind is not None and kind != self.model:
            raise StreamError(f"{self.model} stream contains {kind} events")
        if self.model == "ball":
            if self.p is None or self.d is None or self.M is None:
                raise StreamError("ball streams need p, d and M")
            object.__setattr__(self, "p", norm_tag(self.p))
        if self.model == "edge" and self.n is None:
            raise StreamError("edge streams need a vertex count n")

    @classmethod
    def from_ball_stream(cls, s: BallStream) -> "StreamData":
        return cls("ball", ball_events(s), p=s.p, d=s.d, M=s.M, weighted=s.weighted)

    def ball_stream(self) -> BallStream:
        if self.model != "ball":
            raise StreamError(f"{self.model} stream is not a ball stream")
        return BallStream(self.p, self.d, self.M, tuple(e.ball for e in self.events), self.weighted)

    @property
    def num_vertices(self) -> int:
        return self.n if self.model == "edge" else len(self.events)

    def graph(self) -> Graph:
        if not self._graph:
            self._graph.append(materialize(self.events, n=self.n, p=self.p))
        return self._graph[0]


def as_events(source: Iterable) -> list[StreamEvent]:
    """Accept a BallStream, StreamData or plain event iterable and return the events."""
    if isinstance(source, BallStream):
        return ball_events(source)
    if isinstance(source, StreamData):
        return list(source.events)
    return list(source)
