"""Exact exponential-time oracles for alpha, omega, chi and weighted alpha.

Everything here is branch-and-bound over integer bitmasks. Each oracle has
a hard size limit and raises :class:`OracleLimitError` above it; there is
no heuristic fallback, so a returned value is always exact.
"""

from __future__ import annotations

import sys
from typing import Iterator, Sequence

from ..errors import OracleLimitError, StreamisError
from .graph import Graph, is_clique, is_independent, is_proper_coloring

ALPHA_LIMIT = 60
CHI_LIMIT = 30

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


def _bits_of(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _greedy_classes(adj: Sequence[int], P: int) -> tuple[list[int], list[int]]:
    """Sequential greedy colouring of ``P`` where colour classes are non-adjacent sets.

    Returns vertices ordered by colour and the colour (1-based) of each.
    """
    order, colors = [], []
    uncolored = P
    c = 0
    while uncolored:
        c += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            uncolored &= ~low
            order.append(v)
            colors.append(c)
    return order, colors


def _max_clique(adj: Sequence[int], P: int) -> int:
    """Maximum clique inside mask ``P``; returns the clique as a mask."""
    best = [0, 0]

    def expand(size: int, R: int, P: int):
        order, colors = _greedy_classes(adj, P)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best[0]:
                return
            v = order[i]
            bit = 1 << v
            newP = P & adj[v]
            if newP:
                expand(size + 1, R | bit, newP)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, R | bit
            P &= ~bit

    if P:
        expand(0, 0, P)
    return best[1]


def _max_weight_clique(adj: Sequence[int], P: int, weights: Sequence[int]) -> tuple[int, int]:
    best = [0, 0]

    def expand(wsum: int, R: int, P: int):
        order, colors = _greedy_classes(adj, P)
        class_max: dict[int, int] = {}
        for v, c in zip(order, colors):
            if weights[v] > class_max.get(c, 0):
                class_max[c] = weights[v]
        prefix = [0] * (len(class_max) + 1)
        for c in range(1, len(class_max) + 1):
            prefix[c] = prefix[c - 1] + class_max[c]
        for i in range(len(order) - 1, -1, -1):
            if wsum + prefix[colors[i]] <= best[0]:
                return
            v = order[i]
            bit = 1 << v
            w = wsum + weights[v]
            newP = P & adj[v]
            if newP:
                expand(w, R | bit, newP)
            elif w > best[0]:
                best[0], best[1] = w, R | bit
            P &= ~bit

    if P:
        expand(0, 0, P)
    return best[0], best[1]


def _complement_bits(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    return [full & ~row & ~(1 << v) for v, row in enumerate(g.bits)]


def _refuse(what: str, n: int, limit: int | None):
    if limit is not None and n > limit:
        raise OracleLimitError(what, n, limit)


def exact_alpha(g: Graph, limit: int | None = ALPHA_LIMIT) -> tuple[int, tuple[int, ...]]:
    """Independence number and a maximum independent set.

    Solved per connected component as a maximum-clique search in the
    component's complement, pruned by a greedy-colouring bound.
    """
    _refuse("exact_alpha", g.n, limit)
    witness: list[int] = []
    for comp in g.components():
        if len(comp) == 1:
            witness.extend(comp)
            continue
        sub, ids = g.induced(comp)
        mask = _max_clique(_complement_bits(sub), (1 << sub.n) - 1)
        witness.extend(ids[v] for v in _bits_of(mask))
    witness.sort()
    assert is_independent(g, witness)
    return len(witness), tuple(witness)


def exact_omega(g: Graph, limit: int | None = ALPHA_LIMIT) -> tuple[int, tuple[int, ...]]:
    """Clique number via :func:`exact_alpha` on the complement."""
    _refuse("exact_omega", g.n, limit)
    size, witness = exact_alpha(g.complement(), limit=None)
    assert is_clique(g, witness)
    return size, witness


def exact_weighted_alpha(
    g: Graph, weights: Sequence[int], limit: int | None = ALPHA_LIMIT
) -> tuple[int, tuple[int, ...]]:
    """Maximum total weight of an independent set, with a witness. Weights must be positive."""
    _refuse("exact_weighted_alpha", g.n, limit)
    if len(weights) != g.n:
        raise StreamisError("need one weight per vertex")
    if any(w <= 0 for w in weights):
        raise StreamisError("weights must be positive")
    total, witness = 0, []
    for comp in g.components():
        sub, ids = g.induced(comp)
        sub_w = [weights[v] for v in ids]
        w, mask = _max_weight_clique(_complement_bits(sub), (1 << sub.n) - 1, sub_w)
        total += w
        witness.extend(ids[v] for v in _bits_of(mask))
    witness.sort()
    assert is_independent(g, witness)
    return total, tuple(witness)


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    colors = [-1] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (len({colors[w] for w in g.adj[u] if colors[w] >= 0}), len(g.adj[u]), -u),
        )
        used = {colors[w] for w in g.adj[v]}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def _k_colorable(g: Graph, k: int) -> list[int] | None:
    n = g.n
    colors = [-1] * n
    adj = [tuple(g.adj[v]) for v in range(n)]

    def pick():
        best, best_key = -1, None
        for u in range(n):
            if colors[u] >= 0:
                continue
            sat = len({colors[w] for w in adj[u] if colors[w] >= 0})
            key = (sat, len(adj[u]))
            if best_key is None or key > best_key:
                best, best_key = u, key
        return best

    def solve(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        forbidden = {colors[w] for w in adj[v]}
        # colours beyond used+1 are symmetric to colour `used`
        for c in range(min(k, used + 1)):
            if c in forbidden:
                continue
            colors[v] = c
            if solve(done + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    return colors if solve(0, 0) else None


def exact_chi(g: Graph, limit: int | None = CHI_LIMIT) -> tuple[int, list[int]]:
    """Chromatic number and a proper colouring using exactly that many colours.

    Iterative deepening from the clique number up to a DSATUR upper bound.
    """
    _refuse("exact_chi", g.n, limit)
    if g.n == 0:
        return 0, []
    upper = _dsatur_greedy(g)
    hi = max(upper) + 1
    lo, _ = exact_omega(g, limit=None)
    for k in range(lo, hi):
        found = _k_colorable(g, k)
        if found is not None:
            best = found
            break
    else:
        best = upper
    chi = max(best) + 1
    assert is_proper_coloring(g, best)
    return chi, best


def maximal_independent_sets(g: Graph, limit: int | None = ALPHA_LIMIT) -> Iterator[tuple[int, ...]]:
    """Enumerate every maximal independent set (Bron-Kerbosch with pivoting on the complement)."""
    _refuse("maximal_independent_sets", g.n, limit)
    cadj = _complement_bits(g)

    def bk(R: int, P: int, X: int):
        if not P and not X:
            yield tuple(_bits_of(R))
            return
        pivot = max(_bits_of(P | X), key=lambda u: bin(P & cadj[u]).count("1"))
        for v in list(_bits_of(P & ~cadj[pivot])):
            bit = 1 << v
            yield from bk(R | bit, P & cadj[v], X & cadj[v])
            P &= ~bit
            X |= bit

    if g.n == 0:
        yield ()
        return
    yield from bk(0, (1 << g.n) - 1, 0)
