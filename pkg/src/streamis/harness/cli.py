"""Command-line front end.

Every result is printed to stdout as one JSON record per line. Exit status
is 0 on success, 1 on a contract violation (bad input, failed check) and 2
when an exact oracle refuses an instance above its size limit.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from ..core.graph import is_independent, is_maximal
from ..core.oracles import ALPHA_LIMIT, CHI_LIMIT, exact_alpha, exact_chi, exact_omega, exact_weighted_alpha
from ..core.streams import StreamData
from ..errors import OracleLimitError, StreamisError
from ..gadgets import (
    ChainInstance,
    gen_chained_clique_instance,
    gen_explicit_interval_gadget,
    gen_maximal_index_gadget,
    gen_rs_index_gadget,
    gen_square_chain3_gadget,
    gen_strip_region_gadget,
    random_rs_selection,
    verify_gap,
)
from . import generators
from .bounds import DEFAULT_BOUNDS, enforce_space
from .io import file_digest, meta_path, read_gadget, read_meta, read_stream, write_gadget, write_stream
from .records import RunRecord, summary_table, to_csv
from .trials import ALGORITHMS, run_algorithm, run_trials, try_exact

GADGETS = ("interval-gadget", "strip-region", "square-chain3", "chained-clique",
           "maximal-index", "rs-index")
RANDOM = ("random-squares", "planted-squares", "unit-intervals", "random-vertex")


class ContractError(StreamisError):
    """A CLI-level check failed."""


def _emit(obj):
    print(json.dumps(obj, sort_keys=True))


def _bits(text: str) -> list[int]:
    if not text or any(ch not in "01" for ch in text):
        raise ContractError(f"bit string must contain only 0 and 1, got {text!r}")
    return [int(ch) for ch in text]


def _gen(a) -> int:
    rng = random.Random(a.seed)
    name = a.kind
    gadget = stream = None
    if name == "interval-gadget":
        X = _bits(a.x)
        if a.n is not None and a.n != len(X):
            raise ContractError(f"--n {a.n} does not match the length of --x ({len(X)})")
        gadget = gen_explicit_interval_gadget(X, a.sigma)
    elif name == "strip-region":
        gadget = gen_strip_region_gadget(_bits(a.x), a.sigma, a.delta)
    elif name == "maximal-index":
        gadget = gen_maximal_index_gadget(_bits(a.x), a.sigma)
    elif name == "square-chain3":
        X1, X2 = _bits(a.x1), _bits(a.x2)
        if len(X1) != len(X2):
            raise ContractError("--x1 and --x2 must have equal length")
        ch = ChainInstance.unchecked(3, len(X1), (X1, X2), (a.sigma1, a.sigma2), X1[a.sigma1 - 1])
        gadget = gen_square_chain3_gadget(ch, a.kreps, a.norm)
    elif name == "chained-clique":
        if a.z is None:
            raise ContractError("chained-clique needs --z")
        k = 2 * a.c
        length = a.length or 2 * a.c
        ch = ChainInstance.random(k, length, a.z, rng)
        gadget = gen_chained_clique_instance(ch, a.n, a.c, include_isolated=not a.no_isolated)
    elif name == "rs-index":
        gadget = gen_rs_index_gadget(a.r, a.s, random_rs_selection(a.r, a.s, rng), a.i)
    elif name == "random-squares":
        bs = generators.random_unit_squares(a.n, a.box, rng, a.radius, a.norm, a.max_weight)
        stream = StreamData.from_ball_stream(bs)
    elif name == "planted-squares":
        bs, _ = generators.planted_squares(a.alpha, rng, a.layout)
        stream = StreamData.from_ball_stream(bs)
    elif name == "unit-intervals":
        stream = StreamData.from_ball_stream(generators.random_unit_intervals(a.n, a.length or 10 * a.n, rng))
    elif name == "random-vertex":
        stream = generators.random_vertex_stream(a.n, a.density, rng)
    if gadget is not None:
        side = write_gadget(gadget, a.output)
        _emit({"record": "gen", "kind": name, "path": a.output, "meta": side,
               "events": len(gadget.events), "expected_low": gadget.expected_low,
               "expected_high": gadget.expected_high, "case": gadget.case})
    else:
        write_stream(stream, a.output)
        _emit({"record": "gen", "kind": name, "path": a.output, "events": len(stream.events)})
    return 0


def _phases(path) -> list[int]:
    side = meta_path(path)
    if os.path.exists(side):
        return read_meta(side)["metadata"].get("phases", [])
    return []


def _run(a) -> int:
    stream = read_stream(a.file)
    rec = run_algorithm(a.alg, stream, eps=a.eps, seed=a.seed, input_name=file_digest(a.file),
                        phases=_phases(a.file))
    rec.set_exact(try_exact(a.alg, stream, a.oracle_limit))
    _emit(rec.as_dict())
    if a.enforce or a.bound:
        check = enforce_space(rec, a.bound or DEFAULT_BOUNDS[a.alg], eps=a.eps,
                              n=len(stream.events), k=None, W=_max_weight(stream))
        _emit(check.as_dict())
        if not check.passed:
            raise ContractError(f"peak_items {check.peak_items} exceeds bound {check.bound} = {check.limit}")
    return 0


def _max_weight(stream: StreamData):
    if stream.model != "ball":
        return None
    return max((e.ball.weight for e in stream.events), default=1)


def _oracle(a) -> int:
    stream = read_stream(a.file)
    g = stream.graph()
    if a.quantity == "alpha":
        value, witness = exact_alpha(g, a.limit or ALPHA_LIMIT)
    elif a.quantity == "omega":
        value, witness = exact_omega(g, a.limit or ALPHA_LIMIT)
    elif a.quantity == "walpha":
        if stream.model != "ball":
            raise ContractError("weighted alpha needs a ball stream")
        value, witness = exact_weighted_alpha(g, [e.ball.weight for e in stream.events], a.limit or ALPHA_LIMIT)
    else:
        value, witness = exact_chi(g, a.limit or CHI_LIMIT)
    _emit({"record": "oracle", "quantity": a.quantity, "value": value, "witness": list(witness)})
    return 0


def _verify(a) -> int:
    failures = []
    if a.record:
        stream = read_stream(a.file)
        g = stream.graph()
        with open(a.record, encoding="utf-8") as fh:
            recs = [json.loads(line) for line in fh if line.strip()]
        for d in recs:
            if d.get("record") != "run":
                continue
            sel = d["selected"]
            ind = is_independent(g, sel)
            maximal = ind and is_maximal(g, sel)
            _emit({"record": "mis-check", "alg": d["alg"], "seed": d["seed"], "independent": ind,
                   "maximal": maximal})
            if not ind or (d["alg"] == "greedy" and not maximal):
                failures.append(f"{d['alg']} output fails the independence/maximality check")
    meta = a.meta or meta_path(a.file)
    if os.path.exists(meta):
        gadget = read_gadget(a.file, meta)
        if gadget.case in ("low", "high"):
            rep = verify_gap(gadget, a.quantity, limit=a.limit)
            _emit({"record": "gap", **rep.as_dict()})
            if not rep.passed:
                failures.append(f"{rep.quantity} = {rep.value} violates the {rep.case}-case claim {rep.expected}")
        else:
            _emit({"record": "gap", "skipped": f"gadget case {gadget.case!r} has no claimed value"})
    elif not a.record:
        raise ContractError(f"no metadata sidecar at {meta} and no --record given")
    if failures:
        raise ContractError("; ".join(failures))
    return 0


def _trials(a) -> int:
    stream = read_stream(a.file)
    summary, records = run_trials(a.alg, stream, a.trials, eps=a.eps, base_seed=a.seed,
                                  exact=a.exact, workers=a.workers, input_name=file_digest(a.file))
    if a.records:
        for r in records:
            _emit(r.as_dict())
    _emit(summary.as_dict())
    return 0


def _report(a) -> int:
    records = []
    for path in a.records:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    d = json.loads(line)
                except json.JSONDecodeError:
                    raise ContractError(f"{path}:{lineno}: not a JSON record") from None
                if d.get("record") == "run":
                    records.append(RunRecord.from_dict(d))
    text = to_csv(records)
    if a.csv:
        with open(a.csv, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)
    print(summary_table(records))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="streamis", description="Streaming independent-set toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a gadget or random stream")
    g.add_argument("kind", choices=GADGETS + RANDOM)
    g.add_argument("-o", "--output", required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int)
    g.add_argument("--x", help="bit string")
    g.add_argument("--x1")
    g.add_argument("--x2")
    g.add_argument("--sigma", type=int, default=1)
    g.add_argument("--sigma1", type=int, default=1)
    g.add_argument("--sigma2", type=int, default=1)
    g.add_argument("--delta", default="1")
    g.add_argument("--kreps", type=int, default=1)
    g.add_argument("--norm", default="linf")
    g.add_argument("--c", type=int, default=2)
    g.add_argument("--z", type=int, choices=(0, 1))
    g.add_argument("--length", type=int, help="vector length (chained-clique) or line length (intervals)")
    g.add_argument("--no-isolated", action="store_true")
    g.add_argument("--r", type=int, default=2)
    g.add_argument("--s", type=int, default=4)
    g.add_argument("--i", type=int, default=1)
    g.add_argument("--box", type=int, default=100)
    g.add_argument("--radius", type=int, default=1)
    g.add_argument("--max-weight", type=int)
    g.add_argument("--alpha", type=int, default=10)
    g.add_argument("--layout", default="random", choices=("aligned", "random", "sparse"))
    g.add_argument("--density", type=float, default=0.1)
    g.set_defaults(func=_gen)

    r = sub.add_parser("run", help="run one algorithm and emit a run record")
    r.add_argument("alg", choices=ALGORITHMS)
    r.add_argument("file")
    r.add_argument("--eps", type=float, default=0.5)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--oracle-limit", type=int, default=ALPHA_LIMIT)
    r.add_argument("--enforce", action="store_true", help="check the default space bound")
    r.add_argument("--bound", help="space bound expression over alpha, eps, n, k, output, W")
    r.set_defaults(func=_run)

    o = sub.add_parser("oracle", help="exact alpha, omega, weighted alpha or chi")
    o.add_argument("quantity", choices=("alpha", "omega", "walpha", "chi"))
    o.add_argument("file")
    o.add_argument("--limit", type=int)
    o.set_defaults(func=_oracle)

    v = sub.add_parser("verify", help="check a gadget's claimed gap and/or a run's output set")
    v.add_argument("file")
    v.add_argument("meta", nargs="?")
    v.add_argument("--quantity", choices=("alpha", "omega", "chi"))
    v.add_argument("--record", help="JSON-lines file of run records to check")
    v.add_argument("--limit", type=int)
    v.set_defaults(func=_verify)

    t = sub.add_parser("trials", help="seeded Monte-Carlo success rate")
    t.add_argument("alg", choices=ALGORITHMS)
    t.add_argument("file")
    t.add_argument("--trials", type=int, default=100)
    t.add_argument("--eps", type=float, default=0.5)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--exact", type=int, help="known alpha (skips the oracle)")
    t.add_argument("--workers", type=int, default=1)
    t.add_argument("--records", action="store_true", help="also print every run record")
    t.set_defaults(func=_trials)

    rp = sub.add_parser("report", help="CSV and summary table from run records")
    rp.add_argument("records", nargs="+")
    rp.add_argument("--csv")
    rp.set_defaults(func=_report)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OracleLimitError as exc:
        print(f"streamis: oracle refused: {exc}", file=sys.stderr)
        return 2
    except (StreamisError, ValueError, OSError) as exc:
        print(f"streamis: error: {exc}", file=sys.stderr)
        return 1
