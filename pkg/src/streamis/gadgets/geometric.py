"""Gap instances for interval-style vertex streams and for unit-square ball streams."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..core.geometry import Ball, norm_tag, rotate_l1_to_linf
from ..core.streams import BallArrival, StreamData, VertexArrival
from ..errors import GadgetError
from .chain import ChainInstance
from .output import GadgetOutput


def _bits(X: Sequence[int]) -> list[int]:
    X = [int(b) for b in X]
    if not X or any(b not in (0, 1) for b in X):
        raise GadgetError("X must be a nonempty binary vector")
    return X


def gen_explicit_interval_gadget(X: Sequence[int], sigma: int) -> GadgetOutput:
    """Two-party explicit vertex stream on 2n + 3 vertices with alpha 5 (X_sigma = 1) or 3.

    Alice's vertices are ``a_i = i - 1``, ``b_i = n + i - 1`` and ``x = 2n``,
    forming three cliques: the ``a_i`` with X_i = 1, the ``b_i`` with
    X_i = 1, and everything else. Bob adds ``y`` joined to every ``a_i``
    except ``a_sigma`` and ``z`` joined to every ``b_i`` except ``b_sigma``.
    """
    X = _bits(X)
    n = len(X)
    if not 1 <= sigma <= n:
        raise GadgetError(f"sigma must lie in [1, {n}]")
    a = list(range(n))
    b = list(range(n, 2 * n))
    x, y, z = 2 * n, 2 * n + 1, 2 * n + 2
    A1 = [a[i] for i in range(n) if X[i]]
    B1 = [b[i] for i in range(n) if X[i]]
    rest = [a[i] for i in range(n) if not X[i]] + [b[i] for i in range(n) if not X[i]] + [x]
    back: dict[int, set[int]] = {v: set() for v in range(2 * n + 3)}
    for clique in (A1, B1, rest):
        for u in clique:
            back[u].update(v for v in clique if v < u)
    back[y] = {a[i] for i in range(n) if i != sigma - 1}
    back[z] = {b[i] for i in range(n) if i != sigma - 1}
    events = [VertexArrival(v, frozenset(back[v])) for v in range(2 * n + 3)]
    meta = {
        "gadget": "interval",
        "params": {"n": n, "X": "".join(map(str, X)), "sigma": sigma},
        "quantity": "alpha",
        "case": "high" if X[sigma - 1] else "low",
        "phases": [0, y],
        "landmarks": {"A": a, "B": b, "x": [x], "y": [y], "z": [z],
                      "witness": [a[sigma - 1], b[sigma - 1], x, y, z] if X[sigma - 1] else []},
    }
    return GadgetOutput(StreamData("vertex", events), meta, 3, 5)


def gen_strip_region_gadget(X: Sequence[int], sigma: int, delta=1) -> GadgetOutput:
    """Index instance as l-infinity squares of side w = 4n / delta inside a (2 + delta) w box.

    Alice's squares form a staircase that pairwise intersect. Bob's two
    squares avoid the square of index sigma and respectively hit every
    staircase square after it and before it.
    """
    X = _bits(X)
    n = len(X)
    if not 1 <= sigma <= n:
        raise GadgetError(f"sigma must lie in [1, {n}]")
    delta = Fraction(delta)
    if delta <= 0:
        raise GadgetError("delta must be positive")
    h = Fraction(2 * n) / delta
    if h.denominator != 1:
        raise GadgetError(f"2n / delta = {h} is not an integer, so centres would leave the lattice")
    h = int(h)
    if n - 1 > h:
        raise GadgetError(f"delta={delta} is too large for n={n}: staircase squares stop overlapping")
    w = 2 * h
    balls = [Ball((h + 2 * i, h + 2 * n + 2 - 2 * i), h) for i in range(1, n + 1) if X[i - 1]]
    alice = len(balls)
    balls.append(Ball((3 * h + 2 * sigma + 1, h + 2 * n + 2 - 2 * sigma), h))
    balls.append(Ball((h + 2 * sigma, 3 * h + 2 * n + 3 - 2 * sigma), h))
    side = 2 * w + 4 * n  # (2 + delta) w
    meta = {
        "gadget": "strip-region",
        "params": {"n": n, "X": "".join(map(str, X)), "sigma": sigma, "delta": str(delta)},
        "quantity": "alpha",
        "case": "high" if X[sigma - 1] else "low",
        "phases": [0, alice],
        "region": [0, side],
        "w": w,
        "landmarks": {"alice": list(range(alice)), "bob": [alice, alice + 1]},
    }
    events = [BallArrival(b) for b in balls]
    return GadgetOutput(StreamData("ball", events, p="linf", d=2, M=side + 1), meta, 2, 3)


def gen_square_chain3_gadget(ch: ChainInstance, kreps: int, norm="l1") -> GadgetOutput:
    """Three-party unit-ball instance: alpha is 5k when both answer bits are 1, at most 2k + 2 when both are 0.

    The construction is laid out in l1 balls of radius 2n^2 that meet only
    when their interiors overlap. Coordinates are emitted at four times
    scale with radius 8n^2 - 1, so every scaled distance is even and the
    closed balls meet exactly when the open originals did. ``norm="linf"``
    additionally rotates by 45 degrees, which turns the diamonds into
    axis-aligned squares with the same intersection graph.
    """
    if ch.k != 3:
        raise GadgetError(f"need a three-party instance, got k={ch.k}")
    n = ch.n
    if not 1 <= kreps <= n:
        raise GadgetError(f"kreps must lie in [1, {n}]")
    norm = norm_tag(norm)
    if norm not in ("l1", "linf"):
        raise GadgetError("square-chain gadget is defined for l1 or linf balls")
    X1, X2 = ch.X
    s1, s2 = ch.sigma
    gap = 4 * n + 3
    period = 4 * n * n + 3 * n
    radius = 8 * n * n - 1

    # scaled by 4; column x uses (j + 3/2) * period, i.e. (4j + 6) * period after scaling
    g1, g2, g3 = [], [], []
    tag1, tag2 = [], []  # bit index behind each ball
    for j in range(1, kreps + 1):
        for i in range(1, n + 1):
            if X1[i - 1]:
                cx = 4 * (i * gap + (j + 1) * period)
                g1 += [(cx, 16 * n * n), (cx, 32 * n * n)]
                tag1 += [i, i]
    for j in range(1, kreps + 1):
        cx = 4 * s1 * gap + (4 * j + 6) * period
        for i in range(1, n + 1):
            if X2[i - 1]:
                g2.append((cx, 4 * (6 * n * n - n + 2 * i)))
                tag2.append(i)
    for j in range(1, kreps + 1):
        cx = 4 * s1 * gap + (4 * j + 6) * period
        g3.append((cx, 4 * (10 * n * n - n + 2 * s2 + 1)))
        g3.append((cx, 4 * (2 * n * n - n + 2 * s2 - 1)))

    centres = g1 + g2 + g3
    balls = [Ball(c, radius) for c in centres]
    if norm == "linf":
        offset = max(y for _, y in centres)
        balls = [rotate_l1_to_linf(b, offset) for b in balls]
    top = max(max(b.center) for b in balls)
    M = max(40 * n ** 3, top + 1, radius + 1)

    ids1 = list(range(len(g1)))
    ids2 = list(range(len(g1), len(g1) + len(g2)))
    ids3 = list(range(len(g1) + len(g2), len(centres)))
    z = ch.z if ch.promise_holds() else None
    witness = []
    if X1[s1 - 1] and X2[s2 - 1]:
        row = [ids1[t] for t, i in enumerate(tag1) if i == s1]
        col = [ids2[t] for t, i in enumerate(tag2) if i == s2]
        witness = row + col + ids3
    meta = {
        "gadget": "square-chain3",
        "params": {"n": n, "kreps": kreps, "sigma": [s1, s2], "norm": norm,
                   "X1": "".join(map(str, X1)), "X2": "".join(map(str, X2)), "scale": 4},
        "quantity": "alpha",
        "case": {1: "high", 0: "low", None: "mixed"}[z],
        "phases": [0, len(g1), len(g1) + len(g2)],
        "landmarks": {"G1": ids1, "G2": ids2, "G3": ids3, "witness": witness},
    }
    events = [BallArrival(b) for b in balls]
    return GadgetOutput(StreamData("ball", events, p=norm, d=2, M=M), meta, 2 * kreps + 2, 5 * kreps)
