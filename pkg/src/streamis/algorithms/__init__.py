"""One-pass streaming algorithms with item-level space accounting."""

from .estimator import AlphaEstimator, BottomKSketch, EstimateResult, alpha_estimator_3eps, sketch_size
from .greedy import GreedyMIS, MISResult, greedy_mis
from .space import SpaceAccount
from .strips import (
    PartitionShift,
    SquareFrame,
    StripDecomposition,
    StripKey,
    StripSummary,
    partition_shifts,
    shift_members,
    strip_assign,
    strip_solve,
    unit_square_mis_3approx,
)
from .weighted import (
    WeightedResult,
    WeightedStripDecomposition,
    classes_kept,
    weighted_space_bound,
    weighted_unit_square_3eps,
)

__all__ = [name for name in dir() if not name.startswith("_")]
