"""Stream files, run records, space-bound checks, trials and the CLI."""

from .bounds import DEFAULT_BOUNDS, BoundError, SpaceCheck, enforce_space, evaluate_bound
from .generators import planted_squares, random_unit_intervals, random_unit_squares, random_vertex_stream
from .io import (
    dumps_stream,
    file_digest,
    loads_stream,
    meta_path,
    read_gadget,
    read_meta,
    read_stream,
    write_gadget,
    write_stream,
)
from .records import CSV_COLUMNS, RunRecord, TrialSummary, summary_table, to_csv
from .trials import ALGORITHMS, approximation_factor, exact_value, run_algorithm, run_trials, try_exact

__all__ = [name for name in dir() if not name.startswith("_")]
