"""Running algorithms on streams, with phase snapshots and seeded Monte-Carlo trials."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor

from ..algorithms.estimator import AlphaEstimator
from ..algorithms.greedy import GreedyMIS
from ..algorithms.strips import StripDecomposition, _check_unit
from ..algorithms.weighted import WeightedStripDecomposition
from ..core.oracles import ALPHA_LIMIT, exact_alpha, exact_weighted_alpha
from ..core.streams import StreamData
from ..errors import OracleLimitError, StreamError
from .records import RunRecord, TrialSummary

ALGORITHMS = ("greedy", "strip", "estimator", "weighted")


def _make(alg: str, stream: StreamData, eps: float, seed: int):
    if alg == "greedy":
        if stream.model == "edge":
            raise StreamError("greedy MIS is undefined on edge-arrival streams")
        return GreedyMIS(stream.p)
    if stream.model != "ball":
        raise StreamError(f"{alg} needs a ball stream, got a {stream.model} stream")
    _check_unit(stream.ball_stream())
    if alg == "strip":
        return StripDecomposition(stream.p)
    if alg == "estimator":
        return AlphaEstimator(eps, seed, stream.p)
    if alg == "weighted":
        return WeightedStripDecomposition(eps, stream.p)
    raise ValueError(f"unknown algorithm {alg!r}; expected one of {ALGORITHMS}")


def run_algorithm(alg: str, stream: StreamData, *, eps: float = 0.5, seed: int = 0,
                  input_name: str = "", phases=()) -> RunRecord:
    """Feed the stream through one algorithm.

    A space snapshot is taken just before each offset in ``phases`` (the
    state a party would pass on) and once more at the end.
    """
    algo = _make(alg, stream, eps, seed)
    marks = sorted(set(p for p in phases if p > 0))
    snaps = []
    t0 = time.perf_counter()
    for pos, event in enumerate(stream.events):
        if marks and pos == marks[0]:
            snaps.append({"offset": pos, **algo.space.snapshot()})
            marks.pop(0)
        algo.process(event)
    res = algo.result()
    ms = (time.perf_counter() - t0) * 1000
    snaps.append({"offset": len(stream.events), **algo.space.snapshot()})
    if alg == "estimator":
        output, selected = res.estimate, []
    elif alg == "weighted":
        output, selected = res.weight, list(res.selected)
    else:
        output, selected = len(res.selected), list(res.selected)
    return RunRecord(alg, input_name, seed, output, res.space.peak_items, round(ms, 3),
                     registers=res.space.registers, consumed=len(stream.events),
                     selected=selected, snapshots=snaps)


def exact_value(alg: str, stream: StreamData, limit: int | None = ALPHA_LIMIT) -> int:
    """Weighted or unweighted independence number, the reference for ``alg``."""
    g = stream.graph()
    if alg == "weighted":
        weights = [e.ball.weight for e in stream.events]
        return exact_weighted_alpha(g, weights, limit)[0]
    return exact_alpha(g, limit)[0]


def try_exact(alg: str, stream: StreamData, limit: int | None = ALPHA_LIMIT) -> int | None:
    try:
        return exact_value(alg, stream, limit)
    except OracleLimitError:
        return None


def _one(args):
    alg, stream, eps, seed, name = args
    return run_algorithm(alg, stream, eps=eps, seed=seed, input_name=name)


def approximation_factor(alg: str, eps: float) -> float:
    return {"greedy": float("inf"), "strip": 3.0, "estimator": 3 + eps,
            "weighted": (3 + eps) * (1 + eps)}[alg]


def run_trials(alg: str, stream: StreamData, trials: int, *, eps: float = 0.5, base_seed: int = 0,
               exact: int | None = None, workers: int = 1, input_name: str = ""):
    """Run seeds ``base_seed .. base_seed + trials - 1``; returns (summary, records in seed order).

    A trial succeeds when ``exact / c <= output <= exact``. Seeds run in a
    process pool when ``workers > 1``; results are collected in seed order.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if exact is None:
        exact = exact_value(alg, stream, None)
    jobs = [(alg, stream, eps, base_seed + t, input_name) for t in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_one, jobs))
    else:
        records = [_one(j) for j in jobs]
    c = approximation_factor(alg, eps)
    ok = 0
    for r in records:
        r.set_exact(exact)
        if exact / c <= r.output + 1e-9 and r.output <= exact + 1e-9:
            ok += 1
    return TrialSummary(alg, input_name, trials, ok, c, exact), records
