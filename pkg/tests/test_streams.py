import random

import pytest

from streamis.core import (
    Ball,
    BallArrival,
    BallStream,
    EdgeArrival,
    Graph,
    StreamData,
    VertexArrival,
    complement_stream,
    edge_stream,
    materialize,
    stream_kind,
    vertex_stream,
)
from streamis.errors import StreamError

from conftest import random_graph


def test_vertex_stream_single_edge():
    g = materialize([VertexArrival(0, []), VertexArrival(1, [0])])
    assert g.n == 2 and g.edges() == [(0, 1)]


def test_edge_stream_k4():
    edges = [EdgeArrival(u, v) for u in range(4) for v in range(u + 1, 4)]
    assert materialize(edges) == Graph.complete(4)


def test_mixed_kinds_rejected():
    with pytest.raises(StreamError):
        materialize([EdgeArrival(0, 1), VertexArrival(0, [])])


def test_duplicate_edge_rejected():
    with pytest.raises(StreamError):
        materialize([EdgeArrival(0, 1), EdgeArrival(1, 0)])


def test_forward_reference_rejected():
    with pytest.raises(StreamError):
        materialize([VertexArrival(0, [1]), VertexArrival(1, [])])


def test_ball_stream_needs_norm():
    with pytest.raises(StreamError):
        materialize([BallArrival(Ball((0, 0), 1))])


def test_stream_kind():
    assert stream_kind([]) is None
    assert stream_kind([EdgeArrival(0, 1)]) == "edge"


def test_complement_examples():
    k3 = [VertexArrival(0, []), VertexArrival(1, [0]), VertexArrival(2, [0, 1])]
    assert materialize(complement_stream(k3)) == Graph.empty(3)
    empty = [VertexArrival(i, []) for i in range(3)]
    assert materialize(complement_stream(empty)) == Graph.complete(3)


def test_complement_rejects_edges():
    with pytest.raises(StreamError):
        complement_stream([EdgeArrival(0, 1)])


@pytest.mark.parametrize("seed", range(10))
def test_double_complement_identity(seed):
    g = random_graph(10, 0.4, random.Random(seed))
    events, _ = vertex_stream(g)
    assert materialize(complement_stream(complement_stream(events))) == g
    assert materialize(complement_stream(events)) == g.complement()


def test_vertex_stream_reorders():
    g = Graph.from_edges(3, [(0, 2)])
    events, order = vertex_stream(g, [2, 1, 0])
    h = materialize(events)
    assert h.has_edge(0, 2) and order == [2, 1, 0]


def test_edge_stream_roundtrip(rng):
    g = random_graph(12, 0.3, rng)
    assert materialize(edge_stream(g), n=12) == g


def test_streamdata_validation():
    with pytest.raises(StreamError):
        StreamData("edge", [EdgeArrival(0, 1)])
    with pytest.raises(StreamError):
        StreamData("vertex", [EdgeArrival(0, 1)], n=2)
    s = StreamData.from_ball_stream(BallStream("linf", 2, 10, [Ball((1, 1), 1), Ball((2, 2), 1)]))
    assert s.graph().m == 1 and s.num_vertices == 2
