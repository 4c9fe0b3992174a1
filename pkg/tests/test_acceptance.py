"""Acceptance criteria 1-12, one pytest test each.

Every criterion prints a single ``[PASS]`` / ``[FAIL]`` line. The file also
runs standalone: ``python3 tests/test_acceptance.py``.
"""

import itertools
import math
import random
import time
from itertools import combinations

import pytest

from streamis.algorithms import (
    alpha_estimator_3eps,
    greedy_mis,
    partition_shifts,
    sketch_size,
    strip_assign,
    unit_square_mis_3approx,
    weighted_space_bound,
    weighted_unit_square_3eps,
)
from streamis.core import (
    Ball,
    BallStream,
    exact_alpha,
    exact_chi,
    exact_omega,
    exact_weighted_alpha,
    intersection_graph,
    is_clique,
    is_independent,
    is_maximal,
    is_proper_coloring,
    maximal_independent_sets,
    vertex_stream,
)
from streamis.errors import GadgetError, OracleLimitError
from streamis.gadgets import (
    ChainInstance,
    JumpInstance,
    clique_gadget,
    coloring_certificate,
    decode_maximal_index,
    decode_rs_index,
    gen_chained_clique_instance,
    gen_explicit_interval_gadget,
    gen_maximal_index_gadget,
    gen_rs_index_gadget,
    gen_square_chain3_gadget,
    gen_strip_region_gadget,
    jump_to_chain,
    verify_gap,
)
from streamis.harness.generators import (
    planted_squares,
    random_unit_intervals,
    random_unit_squares,
    random_vertex_stream,
)

EPS = 0.5


def _alpha(graph):
    return exact_alpha(graph, limit=None)[0]


def criterion_1():
    rng = random.Random(101)
    for _ in range(200):
        s = random_vertex_stream(rng.randint(1, 200), rng.choice([0.02, 0.05, 0.2, 0.5]), rng)
        g = s.graph()
        sel = greedy_mis(s).selected
        if not (is_independent(g, sel) and is_maximal(g, sel)):
            return False, "vertex stream output not a maximal independent set"
    checked = 0
    for _ in range(200):
        n = rng.randint(1, 80)
        bs = random_unit_intervals(n, rng.randint(10, 200), rng)
        g = intersection_graph(bs)
        sel = greedy_mis(bs).selected
        if not (is_independent(g, sel) and is_maximal(g, sel)):
            return False, "interval stream output not a maximal independent set"
        if n <= 40:
            checked += 1
            if 2 * len(sel) < _alpha(g):
                return False, f"interval stream: |output| = {len(sel)} below alpha/2"
    return True, f"400 streams maximal, {checked} interval streams with |output| >= alpha/2"


def criterion_2():
    rng = random.Random(202)
    r, w = 1, 2
    worst = 1.0
    for _ in range(100):
        bs = random_unit_squares(rng.randint(1, 120), 50 * w, rng, r, rng.choice(["linf", "l1"]))
        g = intersection_graph(bs)
        res = unit_square_mis_3approx(bs)
        a = _alpha(g)
        if not is_independent(g, res.selected):
            return False, "output not independent"
        if len(res.selected) < math.ceil(a / 3):
            return False, f"|output| = {len(res.selected)} < ceil({a}/3)"
        if res.space.peak_items > 12 * a:
            return False, f"peak_items {res.space.peak_items} > 12 * {a}"
        worst = min(worst, len(res.selected) / a)
    for r in (1, 2, 3):
        w = 2 * r
        shifts = partition_shifts(w)
        for cx in range(6 * w):
            for cy in range(2 * w):
                hits = sum(strip_assign(Ball((cx, cy), r), s, w) is not None for s in shifts)
                if hits < 2:
                    return False, f"square at ({cx}, {cy}) lies in {hits} partitionings"
    return True, f"100 streams, worst |output|/alpha = {worst:.3f}; two-coverage holds over a period"


def criterion_3():
    rng = random.Random(303)
    layouts = ["aligned", "random", "sparse"]
    sizes = [5, 12, 20, 35, 50, 80, 120, 160, 200, 260, 320, 400]
    worst = 1.0
    for t in range(20):
        if t == 19:
            # disjoint lattice where every shift holds exactly alpha/3
            balls = [Ball((5 * i + 1, 5 * j + 1), 1) for i in range(30) for j in range(12)]
            rng.shuffle(balls)
            bs, a = BallStream("linf", 2, 200, balls), len(balls)
        else:
            bs, a = planted_squares(rng.choice(sizes), rng, layouts[t % 3])
        if _alpha(intersection_graph(bs)) != a:
            return False, f"instance {t}: planted alpha {a} disagrees with the oracle"
        ok = 0
        for seed in range(100):
            est = alpha_estimator_3eps(bs, EPS, seed).estimate
            ok += a / (3 + EPS) <= est <= a
        worst = min(worst, ok / 100)
        if ok < 67:
            return False, f"instance {t} (alpha={a}): {ok}/100 seeds in range"
    cap = 6 * sketch_size(EPS)
    peaks = []
    for target in (1_000, 10_000, 100_000):
        bs, _ = planted_squares(target // 2, random.Random(target), "random")
        peak = alpha_estimator_3eps(bs, EPS, 0).space.peak_items
        peaks.append((len(bs.balls), peak))
        if peak > cap:
            return False, f"peak {peak} > {cap} at n = {len(bs.balls)}"
    return True, f"worst per-instance success {worst:.2f}; peaks {peaks} <= {cap}"


def criterion_4():
    for m, c in ((16, 1), (48, 2), (120, 3)):
        cg = clique_gadget(m, c)
        if len(cg.cliques) != cg.p ** 2 or cg.p ** 2 < m * m / (16 * c * c):
            return False, f"(m, c) = ({m}, {c}): {len(cg.cliques)} cliques"
        edge_sets = [set(combinations(sorted(k), 2)) for k in cg.cliques.values()]
        seen = set()
        for es in edge_sets:
            if seen & es:
                return False, f"(m, c) = ({m}, {c}): cliques share an edge"
            seen |= es
        if exact_omega(cg.graph(), limit=None)[0] != 2 * c:
            return False, f"(m, c) = ({m}, {c}): omega != {2 * c}"
    return True, "p^2 edge-disjoint cliques, omega = 2c for all three parameter pairs"


def criterion_5():
    c = 2
    rng = random.Random(505)
    ones = gen_chained_clique_instance(ChainInstance.random(2 * c, 25, 1, rng, fill=1))
    zeros = gen_chained_clique_instance(ChainInstance.random(2 * c, 25, 0, rng, fill=0))
    n = ones.graph().n
    wit = ones.landmarks["witness"]
    g1 = ones.graph()
    if len(wit) != 4 * c * c or not is_clique(g1, wit):
        return False, "all-ones witness is not a clique of size 16"
    hi = verify_gap(ones)
    lo = verify_gap(zeros)
    if not hi.passed or hi.value < 16:
        return False, f"all-ones omega = {hi.value}"
    if not lo.passed or lo.value > 4 * c - 1:
        return False, f"all-zeros omega = {lo.value}"
    colour = coloring_certificate(zeros)
    if len(set(colour)) > 4 * c or not is_proper_coloring(zeros.graph(), colour):
        return False, "colouring certificate is not a proper 8-colouring"
    try:
        coloring_certificate(ones)
        return False, "certificate produced for the all-ones case"
    except GadgetError:
        pass
    try:
        exact_chi(g1)
        return False, "chi oracle did not refuse"
    except OracleLimitError:
        pass
    return True, f"n = {n}: omega {hi.value} vs {lo.value}, 8-colouring verified, chi refused"


def _greedy_decodes(g, X, sigma, rng, orderings=50):
    graph = g.graph()
    for _ in range(orderings):
        order = list(range(graph.n))
        rng.shuffle(order)
        events, order = vertex_stream(graph, order)
        sel = [order[v] for v in greedy_mis(events).selected]
        if decode_maximal_index(sel, g) != X[sigma - 1]:
            return False
    return True


def criterion_6():
    # X has n^2 bits; every X is enumerated for n <= 3 and sampled for n = 4, 5
    rng = random.Random(606)
    runs = sets = 0
    for n in range(1, 6):
        if n <= 3:
            vectors = list(itertools.product((0, 1), repeat=n * n))
        else:
            vectors = [tuple(rng.randint(0, 1) for _ in range(n * n)) for _ in range(40)]
        for X in vectors:
            for sigma in range(1, n * n + 1):
                g = gen_maximal_index_gadget(X, sigma)
                if n <= 3:
                    for mis in maximal_independent_sets(g.graph()):
                        sets += 1
                        if decode_maximal_index(mis, g) != X[sigma - 1]:
                            return False, f"maximal set {mis} misdecodes X={X}, sigma={sigma}"
                if n != 3 or rng.random() < 0.05:
                    runs += 50
                    if not _greedy_decodes(g, X, sigma, rng):
                        return False, f"greedy misdecodes X={X}, sigma={sigma}"
    return True, f"{sets} maximal sets (n <= 3, all X) and {runs} greedy runs decoded X_sigma"


def criterion_7():
    count = 0
    for n in range(1, 7):
        for X in itertools.product((0, 1), repeat=n):
            for sigma in range(1, n + 1):
                a = _alpha(gen_explicit_interval_gadget(X, sigma).graph())
                count += 1
                if a != (5 if X[sigma - 1] else 3):
                    return False, f"X={X}, sigma={sigma}: alpha = {a}"
    return True, f"{count} instances give alpha 5 / 3"


def criterion_8():
    count = 0
    for delta in (1, 2):
        for n in range(1, 5):
            for X in itertools.product((0, 1), repeat=n):
                for sigma in range(1, n + 1):
                    a = _alpha(gen_strip_region_gadget(X, sigma, delta).graph())
                    count += 1
                    if a != (3 if X[sigma - 1] else 2):
                        return False, f"delta={delta}, X={X}, sigma={sigma}: alpha = {a}"
    return True, f"{count} instances give alpha 3 / 2"


def _chain3_instances(n, z):
    for s1, s2 in itertools.product(range(1, n + 1), repeat=2):
        for x1 in itertools.product((0, 1), repeat=n):
            if x1[s1 - 1] != z:
                continue
            for x2 in itertools.product((0, 1), repeat=n):
                if x2[s2 - 1] == z:
                    yield ChainInstance(3, n, (x1, x2), (s1, s2), z)


def criterion_9():
    # z = 0 reaches 2k+2 only when some bit before sigma_1 in the first vector is 1,
    # otherwise alpha is 2k; see the decisions ledger
    count = 0
    for n in (2, 3):
        for k in (1, 2):
            for z in (0, 1):
                for ch in _chain3_instances(n, z):
                    a = _alpha(gen_square_chain3_gadget(ch, k).graph())
                    count += 1
                    if z == 1 and a != 5 * k:
                        return False, f"ones case {ch}: alpha = {a} != {5 * k}"
                    if z == 0:
                        earlier = any(ch.X[0][: ch.sigma[0] - 1])
                        want = 2 * k + 2 if earlier else 2 * k
                        if a > 2 * k + 2 or a != want:
                            return False, f"zeros case {ch}: alpha = {a}, expected {want}"
    return True, f"{count} instances: 5k when z=1, at most 2k+2 when z=0"


def criterion_10():
    rng = random.Random(1010)
    for _ in range(500):
        j = JumpInstance.random(rng.randint(1, 32), rng.randint(2, 6), rng)
        x = j.alpha
        for table in j.f:
            x = table[x - 1]
        ch = jump_to_chain(j)
        if not ch.promise_holds() or ch.z != x:
            return False, f"reduction broke on {j}"
    return True, "500 instances: promise holds and z = f_{2:k}(alpha)"


def criterion_11():
    rng = random.Random(1111)
    worst = math.inf
    for _ in range(50):
        W = rng.choice([10, 1000, 10 ** 6])
        bs = random_unit_squares(rng.randint(1, 60), 30, rng, 1, max_weight=W)
        g = intersection_graph(bs)
        weights = [b.weight for b in bs.balls]
        best = exact_weighted_alpha(g, weights, limit=None)[0]
        res = weighted_unit_square_3eps(bs, EPS)
        if not is_independent(g, res.selected):
            return False, "output not independent"
        if res.weight * (3 + EPS) * (1 + EPS) < best:
            return False, f"weight {res.weight} too small against {best}"
        bound = weighted_space_bound(_alpha(g), EPS)
        if res.space.peak_items > bound:
            return False, f"peak_items {res.space.peak_items} > {bound}"
        worst = min(worst, res.weight / best)
    return True, f"50 instances, worst weight ratio {worst:.3f}, space within 6*alpha*(2L+1)"


def criterion_12():
    count = 0
    for sel in itertools.product(itertools.combinations(range(4), 2), repeat=2):
        for i in (1, 2):
            g = gen_rs_index_gadget(2, 4, sel, i)
            for mis in maximal_independent_sets(g.graph()):
                d = decode_rs_index(mis, g)
                count += 1
                for pr in d["pairs"]:
                    if pr["selected"] and not (pr["learned"] or not pr["all_covered"]):
                        return False, f"selection {sel}, i={i}: dichotomy fails on {mis}"
    return True, f"{count} maximal independent sets satisfy the dichotomy"


CRITERIA = [
    (1, "greedy maximality", criterion_1, 60),
    (2, "strip 3-approximation", criterion_2, 120),
    (3, "alpha estimator", criterion_3, 180),
    (4, "clique packing", criterion_4, 60),
    (5, "chained-clique gap", criterion_5, 300),
    (6, "maximal-index decoding", criterion_6, 60),
    (7, "interval gadget", criterion_7, 60),
    (8, "strip-region gadget", criterion_8, 60),
    (9, "square-chain3 gadget", criterion_9, 120),
    (10, "jump to chain", criterion_10, 10),
    (11, "weighted variant", criterion_11, 120),
    (12, "rs-index mechanics", criterion_12, 10),
]


def evaluate(num, name, fn, budget):
    t0 = time.perf_counter()
    passed, detail = fn()
    secs = time.perf_counter() - t0
    if secs > budget:
        passed, detail = False, f"{detail} (took {secs:.1f}s, budget {budget}s)"
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {num}: {name}: {detail} ({secs:.1f}s)"
    return passed, line


@pytest.mark.parametrize("num,name,fn,budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, name, fn, budget, capsys):
    passed, line = evaluate(num, name, fn, budget)
    with capsys.disabled():
        print("\n" + line)
    assert passed, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    raise SystemExit(0 if all(p for p, _ in results) else 1)
