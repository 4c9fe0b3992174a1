"""Line-oriented stream files and the JSON metadata sidecar for gadgets.

Formats, one event per line after the header::

    model edge              model vertex            model ball p=inf d=2 M=100
    n 4                     v 0 :                   b 3 4 2
    e 0 1                   v 1 : 0                 b 7 4 2 w=5

Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from ..core.geometry import Ball
from ..core.streams import BallArrival, EdgeArrival, StreamData, VertexArrival
from ..errors import StreamFormatError, StreamisError
from ..gadgets.output import GadgetOutput

_P_OUT = {"l1": "1", "l2": "2", "linf": "inf"}
_P_IN = {"1": "l1", "2": "l2", "inf": "linf"}


def dumps_stream(s: StreamData) -> str:
    lines = []
    if s.model == "edge":
        lines += ["model edge", f"n {s.n}"]
        lines += [f"e {e.u} {e.v}" for e in s.events]
    elif s.model == "vertex":
        lines.append("model vertex")
        for e in s.events:
            ids = " ".join(str(u) for u in sorted(e.back_neighbors))
            lines.append(f"v {e.id} : {ids}".rstrip())
    else:
        lines.append(f"model ball p={_P_OUT[s.p]} d={s.d} M={s.M}")
        for e in s.events:
            b = e.ball
            line = "b " + " ".join(map(str, b.center)) + f" {b.radius}"
            if s.weighted:
                line += f" w={b.weight}"
            lines.append(line)
    return "\n".join(lines) + "\n"


def _int(tok: str, what: str, lineno: int, path) -> int:
    try:
        return int(tok)
    except ValueError:
        raise StreamFormatError(f"{what} must be an integer, got {tok!r}", lineno, path) from None


def loads_stream(text: str, path=None) -> StreamData:
    """Parse a stream file. Malformed or inconsistent lines raise StreamFormatError."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows or rows[0][1][0] != "model" or len(rows[0][1]) < 2:
        raise StreamFormatError("missing 'model <edge|vertex|ball>' header", rows[0][0] if rows else 1, path)
    lineno, head = rows[0]
    model = head[1]
    body = rows[1:]

    if model == "edge":
        if len(head) != 2:
            raise StreamFormatError("edge header takes no options", lineno, path)
        if not body or body[0][1][0] != "n" or len(body[0][1]) != 2:
            raise StreamFormatError("edge stream needs an 'n <count>' line after the header",
                                    body[0][0] if body else lineno, path)
        n = _int(body[0][1][1], "vertex count", body[0][0], path)
        events = []
        seen = set()
        for lineno, tok in body[1:]:
            if tok[0] != "e" or len(tok) != 3:
                raise StreamFormatError(f"expected 'e <u> <v>', got {' '.join(tok)!r}", lineno, path)
            u, v = _int(tok[1], "endpoint", lineno, path), _int(tok[2], "endpoint", lineno, path)
            if not (0 <= u < n and 0 <= v < n):
                raise StreamFormatError(f"edge ({u}, {v}) out of range for n={n}", lineno, path)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise StreamFormatError(f"duplicate edge ({u}, {v})", lineno, path)
            seen.add(key)
            events.append(EdgeArrival(u, v))
        return _build(lambda: StreamData("edge", events, n=n), path)

    if model == "vertex":
        if len(head) != 2:
            raise StreamFormatError("vertex header takes no options", lineno, path)
        events = []
        for lineno, tok in body:
            if tok[0] != "v" or len(tok) < 3 or tok[2] != ":":
                raise StreamFormatError(f"expected 'v <id> : <ids>', got {' '.join(tok)!r}", lineno, path)
            vid = _int(tok[1], "vertex id", lineno, path)
            if vid != len(events):
                raise StreamFormatError(f"vertex id {vid} out of order (expected {len(events)})", lineno, path)
            back = [_int(t, "neighbour id", lineno, path) for t in tok[3:]]
            if any(not 0 <= u < vid for u in back):
                raise StreamFormatError(f"vertex {vid} references an id that has not arrived", lineno, path)
            events.append(VertexArrival(vid, frozenset(back)))
        return _build(lambda: StreamData("vertex", events), path)

    if model == "ball":
        opts = {}
        for tok in head[2:]:
            key, sep, val = tok.partition("=")
            if not sep or key not in ("p", "d", "M") or key in opts:
                raise StreamFormatError(f"bad ball header option {tok!r}", lineno, path)
            opts[key] = val
        if set(opts) != {"p", "d", "M"}:
            raise StreamFormatError("ball header needs p=, d= and M=", lineno, path)
        if opts["p"] not in _P_IN:
            raise StreamFormatError(f"p must be 1, 2 or inf, got {opts['p']!r}", lineno, path)
        p = _P_IN[opts["p"]]
        d = _int(opts["d"], "d", lineno, path)
        M = _int(opts["M"], "M", lineno, path)
        balls, weighted = [], None
        for lineno, tok in body:
            has_w = tok[-1].startswith("w=")
            if weighted is None:
                weighted = has_w
            elif weighted != has_w:
                raise StreamFormatError("either every ball line carries w= or none does", lineno, path)
            nums = tok[1:-1] if has_w else tok[1:]
            if tok[0] != "b" or len(nums) != d + 1:
                raise StreamFormatError(f"expected 'b' with {d} coordinates and a radius", lineno, path)
            vals = [_int(t, "coordinate", lineno, path) for t in nums]
            w = _int(tok[-1][2:], "weight", lineno, path) if has_w else 1
            try:
                balls.append(Ball(tuple(vals[:d]), vals[d], w))
            except StreamisError as exc:
                raise StreamFormatError(str(exc), lineno, path) from None
        events = [BallArrival(b) for b in balls]
        s = _build(lambda: StreamData("ball", events, p=p, d=d, M=M, weighted=bool(weighted)), path)
        _build(s.ball_stream, path)  # range checks
        return s

    raise StreamFormatError(f"unknown model {model!r}", lineno, path)


def _build(make, path):
    try:
        return make()
    except StreamisError as exc:
        raise StreamFormatError(str(exc), None, path) from None


def write_stream(s: StreamData, path) -> None:
    Path(path).write_text(dumps_stream(s), encoding="utf-8")


def read_stream(path) -> StreamData:
    return loads_stream(Path(path).read_text(encoding="utf-8"), path=str(path))


def meta_path(path) -> str:
    return os.fspath(path) + ".meta"


def write_gadget(g: GadgetOutput, path) -> str:
    """Write the stream to ``path`` and the metadata sidecar to ``path.meta``; returns the sidecar path."""
    write_stream(g.stream, path)
    side = meta_path(path)
    doc = {"metadata": g.metadata, "expected_low": g.expected_low, "expected_high": g.expected_high}
    Path(side).write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n", encoding="utf-8")
    return side


def read_meta(path) -> dict:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise StreamFormatError(f"metadata is not valid JSON: {exc.msg}", exc.lineno, str(path)) from None
    if not isinstance(doc, dict) or "metadata" not in doc:
        raise StreamFormatError("metadata sidecar lacks a 'metadata' object", None, str(path))
    return doc


def read_gadget(path, meta=None) -> GadgetOutput:
    doc = read_meta(meta or meta_path(path))
    return GadgetOutput(read_stream(path), doc["metadata"], doc.get("expected_low"), doc.get("expected_high"))


def file_digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()[:16]
