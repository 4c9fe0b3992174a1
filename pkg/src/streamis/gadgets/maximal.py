"""Edge-stream gadgets showing that maximal independent sets reveal hidden bits."""

from __future__ import annotations

import math
import random
from typing import Iterable, Sequence

from ..core.graph import closed_neighborhood, is_maximal
from ..core.streams import EdgeArrival, StreamData
from ..errors import GadgetError
from .output import GadgetOutput


def gen_maximal_index_gadget(X: Sequence[int], sigma: int) -> GadgetOutput:
    """Index instance (X of length n^2, query sigma) as a two-phase edge stream.

    Phase 1 holds two disjoint copies of the bipartite graph whose n x n
    incidence matrix is X. Phase 2 joins every non-query vertex of copy 1
    to every non-query vertex of copy 2.
    """
    X = [int(b) for b in X]
    n = math.isqrt(len(X))
    if n < 1 or n * n != len(X):
        raise GadgetError(f"X must have a square number of bits, got {len(X)}")
    if any(b not in (0, 1) for b in X):
        raise GadgetError("X must be binary")
    if not 1 <= sigma <= n * n:
        raise GadgetError(f"sigma must lie in [1, {n * n}]")
    A1 = list(range(0, n))
    B1 = list(range(n, 2 * n))
    A2 = list(range(2 * n, 3 * n))
    B2 = list(range(3 * n, 4 * n))
    row, col = divmod(sigma - 1, n)

    events = []
    for A, B in ((A1, B1), (A2, B2)):
        for i in range(n):
            for j in range(n):
                if X[i * n + j]:
                    events.append(EdgeArrival(A[i], B[j]))
    bob_start = len(events)
    side1 = [v for v in A1 + B1 if v not in (A1[row], B1[col])]
    side2 = [v for v in A2 + B2 if v not in (A2[row], B2[col])]
    events.extend(EdgeArrival(u, v) for u in side1 for v in side2)

    meta = {
        "gadget": "maximal-index",
        "params": {"n": n, "X": "".join(map(str, X)), "sigma": sigma},
        "quantity": "decode",
        "expected_bit": X[sigma - 1],
        "phases": [0, bob_start],
        "landmarks": {
            "a1": [A1[row]], "b1": [B1[col]], "a2": [A2[row]], "b2": [B2[col]],
            "A1": A1, "B1": B1, "A2": A2, "B2": B2,
        },
    }
    return GadgetOutput(StreamData("edge", events, n=4 * n), meta)


def decode_maximal_index(mis: Iterable[int], gadget: GadgetOutput) -> int:
    """Recover X_sigma from any maximal independent set of the gadget graph."""
    members = frozenset(mis)
    if not is_maximal(gadget.graph(), members):
        raise GadgetError("decoding needs a maximal independent set")
    lm = gadget.landmarks
    pair1 = {lm["a1"][0], lm["b1"][0]}
    pair2 = {lm["a2"][0], lm["b2"][0]}
    return 0 if pair1 <= members or pair2 <= members else 1


def random_rs_selection(r: int, s: int, rng: random.Random) -> list[list[int]]:
    return [sorted(rng.sample(range(s), s // 2)) for _ in range(r)]


def gen_rs_index_gadget(r: int, s: int, selected: Sequence[Sequence[int]], i: int) -> GadgetOutput:
    """RS-Index reduction on the vertex-disjoint (r, s) Ruzsa-Szemeredi graph.

    Matching ``t`` (0-based) has edges ``e = 0..s-1``; ``selected[t]`` lists
    the s/2 edges Alice holds. Each copy keeps the *unselected* edges of every
    matching. Bob then joins everything outside copy 1's query matching to
    everything outside copy 2's. ``i`` is the 1-based queried matching.
    """
    if r < 1 or s < 2 or s % 2:
        raise GadgetError("need r >= 1 and even s >= 2")
    if len(selected) != r:
        raise GadgetError(f"need {r} selected subsets, got {len(selected)}")
    chosen = []
    for t, sub in enumerate(selected):
        sub = sorted(set(sub))
        if len(sub) != s // 2 or any(not 0 <= e < s for e in sub):
            raise GadgetError(f"selected subset {t} must hold {s // 2} distinct edges of [0, {s})")
        chosen.append(set(sub))
    if not 1 <= i <= r:
        raise GadgetError(f"query index must lie in [1, {r}]")
    half = 2 * r * s

    def vid(copy, t, e, side):
        return copy * half + 2 * (t * s + e) + side

    events = []
    for copy in (0, 1):
        for t in range(r):
            for e in range(s):
                if e not in chosen[t]:
                    events.append(EdgeArrival(vid(copy, t, e, 0), vid(copy, t, e, 1)))
    bob_start = len(events)
    q = i - 1
    query = [{vid(c, q, e, side) for e in range(s) for side in (0, 1)} for c in (0, 1)]
    side1 = [v for v in range(half) if v not in query[0]]
    side2 = [v for v in range(half, 2 * half) if v not in query[1]]
    events.extend(EdgeArrival(u, v) for u in side1 for v in side2)

    pairs = [
        {
            "edge": e,
            "selected": e in chosen[q],
            "a1": vid(0, q, e, 0), "b1": vid(0, q, e, 1),
            "a2": vid(1, q, e, 0), "b2": vid(1, q, e, 1),
        }
        for e in range(s)
    ]
    meta = {
        "gadget": "rs-index",
        "params": {"r": r, "s": s, "i": i, "selected": [sorted(c) for c in chosen]},
        "quantity": "decode",
        "phases": [0, bob_start],
        "pairs": pairs,
        "landmarks": {"V_i1": sorted(query[0]), "V_i2": sorted(query[1])},
    }
    return GadgetOutput(StreamData("edge", events, n=2 * half), meta)


def decode_rs_index(mis: Iterable[int], gadget: GadgetOutput) -> dict:
    """Edges of the queried matching learned from an independent set, plus coverage facts.

    An edge is learned when both endpoints of one of its copies are in the
    set. Those endpoints cannot be adjacent, so the edge must be one Alice
    held. Works for any independent set. The per-pair dichotomy is
    ``covered -> learned``.
    """
    g = gadget.graph()
    members = frozenset(mis)
    covered = closed_neighborhood(g, members)
    learned, pair_status = [], []
    for pr in gadget.metadata["pairs"]:
        quad = (pr["a1"], pr["b1"], pr["a2"], pr["b2"])
        got = {pr["a1"], pr["b1"]} <= members or {pr["a2"], pr["b2"]} <= members
        if got:
            learned.append(pr["edge"])
        pair_status.append({
            "edge": pr["edge"],
            "selected": pr["selected"],
            "learned": got,
            "all_covered": all(v in covered for v in quad),
        })
    return {
        "learned": learned,
        "uncovered": g.n - len(covered),
        "pairs": pair_status,
    }
