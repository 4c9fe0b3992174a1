"""Stream models, integer geometry, graphs and exact oracles."""

from .geometry import (
    NORMS,
    Ball,
    BallStream,
    intersection_graph,
    intersects,
    norm_tag,
    rotate_l1_to_linf,
    total_weight,
)
from .graph import (
    Graph,
    closed_neighborhood,
    delta_maximality,
    is_clique,
    is_independent,
    is_maximal,
    is_proper_coloring,
)
from .oracles import (
    ALPHA_LIMIT,
    CHI_LIMIT,
    exact_alpha,
    exact_chi,
    exact_omega,
    exact_weighted_alpha,
    maximal_independent_sets,
)
from .streams import (
    BallArrival,
    EdgeArrival,
    StreamData,
    StreamEvent,
    VertexArrival,
    as_events,
    ball_events,
    complement_stream,
    edge_stream,
    materialize,
    stream_kind,
    vertex_stream,
)

__all__ = [name for name in dir() if not name.startswith("_")]
