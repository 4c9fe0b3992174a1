"""Edge-disjoint clique packings from linear polynomials, and the chained-clique instance."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..core.graph import Graph, is_proper_coloring
from ..core.streams import StreamData, VertexArrival
from ..errors import GadgetError
from .chain import ChainInstance
from .output import GadgetOutput


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def find_prime(lo: int, hi: int) -> int:
    """Smallest prime in [lo, hi]."""
    for q in range(max(lo, 2), hi + 1):
        if is_prime(q):
            return q
    raise GadgetError(f"no prime in [{lo}, {hi}]")


def minimal_party_size(c: int) -> int:
    """Smallest m with 8c^2 < m, the precondition of :func:`clique_gadget`."""
    return 8 * c * c + 1


@dataclass(frozen=True)
class CliqueGadget:
    """``p^2`` edge-disjoint cliques of size 2c on ``m`` vertices.

    Layer ``i`` (1-based) holds ids ``(i-1)*p .. i*p - 1``; vertex ``v^i_j``
    is ``(i-1)*p + j`` for ``j`` in [0, p). Clique ``(a, b)`` takes
    ``v^i_{(a*i + b) mod p}`` from every layer. Ids from ``2c*p`` up to
    ``m - 1`` are the isolated leftovers (absent when ``include_isolated``
    is off, in which case ``m`` is ``2c*p``).
    """

    m: int
    c: int
    p: int
    groups: tuple[tuple[int, ...], ...]
    cliques: dict[tuple[int, int], tuple[int, ...]] = field(repr=False)
    leftovers: tuple[int, ...] = ()

    @property
    def keys(self) -> list[tuple[int, int]]:
        return sorted(self.cliques)

    def clique(self, j: int) -> tuple[int, ...]:
        """Clique encoding bit ``j`` (1-based) of a vector."""
        a, b = divmod(j - 1, self.p)
        return self.cliques[(a, b)]

    @property
    def capacity(self) -> int:
        return self.p * self.p

    def layer_of(self, v: int) -> int | None:
        """1-based layer of ``v``, or None for a leftover."""
        if v < 2 * self.c * self.p:
            return v // self.p + 1
        return None

    def graph(self, bits=None) -> Graph:
        """Union of the cliques whose bit is 1 (all of them when ``bits`` is None)."""
        edges = []
        for j in range(1, self.capacity + 1):
            if bits is None or (j <= len(bits) and bits[j - 1]):
                edges.extend(combinations(self.clique(j), 2))
        return Graph.from_edges(self.m, edges)


def clique_gadget(m: int, c: int, include_isolated: bool = True) -> CliqueGadget:
    if c < 1 or 8 * c * c >= m:
        raise GadgetError(f"need c >= 1 and 8c^2 < m, got m={m}, c={c}")
    lo = -(-m // (4 * c))
    hi = m // (2 * c)
    if lo < 2:
        raise GadgetError("need ceil(m / 4c) >= 2")
    p = find_prime(lo, hi)
    if p <= 2 * c:
        raise GadgetError(f"prime {p} does not exceed 2c = {2 * c}")
    layers = 2 * c
    groups = tuple(tuple(range(i * p, (i + 1) * p)) for i in range(layers))
    cliques = {
        (a, b): tuple((i - 1) * p + (a * i + b) % p for i in range(1, layers + 1))
        for a in range(p)
        for b in range(p)
    }
    used = layers * p
    size = m if include_isolated else used
    return CliqueGadget(size, c, p, groups, cliques, tuple(range(used, size)))


def _vertex_events(n: int, adj: list[set[int]]) -> list[VertexArrival]:
    return [VertexArrival(v, frozenset(u for u in adj[v] if u < v)) for v in range(n)]


def gen_chained_clique_instance(ch: ChainInstance, n: int | None = None, c: int | None = None,
                                include_isolated: bool = True) -> GadgetOutput:
    """Chain_{2c} instance as an explicit vertex stream with one phase per party.

    ``n`` is the total vertex count, split into 2c parties of ``n / 2c``
    vertices each; by default the smallest size meeting the packing
    precondition. Parties 1..2c-1 switch on clique ``j`` of their packing
    iff their bit ``j`` is 1; party 2c holds a single 2c-clique with one
    vertex per layer. Every vertex of party ``i`` is joined to all of the
    answer cliques ``K^j_{sigma_j}`` of earlier parties.
    """
    if c is None:
        if ch.k % 2:
            raise GadgetError(f"party count must be even, got k={ch.k}")
        c = ch.k // 2
    if ch.k != 2 * c:
        raise GadgetError(f"need k = 2c parties, got k={ch.k}, c={c}")
    if n is None:
        n = 2 * c * minimal_party_size(c)
    if n % (2 * c):
        raise GadgetError(f"n={n} is not divisible by 2c={2 * c}")
    gadget = clique_gadget(n // (2 * c), c, include_isolated)
    if ch.n > gadget.capacity:
        raise GadgetError(f"vector length {ch.n} exceeds clique capacity {gadget.capacity}")
    block = gadget.m
    parties = 2 * c
    total = parties * block
    adj: list[set[int]] = [set() for _ in range(total)]

    def link(u, v):
        adj[u].add(v)
        adj[v].add(u)

    landmarks: dict[str, list[int]] = {}
    layers, leftovers, answer = [], [], []
    for i in range(1, parties + 1):
        off = (i - 1) * block
        layers.append([[off + v for v in grp] for grp in gadget.groups])
        leftovers.append([off + v for v in gadget.leftovers])
        if i < parties:
            for j in range(1, ch.n + 1):
                K = [off + v for v in gadget.clique(j)]
                landmarks[f"K{i}_{j}"] = K
                if ch.X[i - 1][j - 1]:
                    for u, v in combinations(K, 2):
                        link(u, v)
            answer.append(landmarks[f"K{i}_{ch.sigma[i - 1]}"])
        else:
            final = [off + grp[0] for grp in gadget.groups]
            landmarks["final"] = final
            for u, v in combinations(final, 2):
                link(u, v)
        for K in answer[: i - 1]:
            for u in range(off, off + block):
                for v in K:
                    link(u, v)

    bits = ch.answer_bits()
    case = "high" if all(bits) else "low" if not any(bits) else "mixed"
    landmarks["witness"] = sorted(v for K in answer for v in K) + landmarks["final"] if all(bits) else []
    meta = {
        "gadget": "chained-clique",
        "params": {"k": ch.k, "n": total, "c": c, "p": gadget.p, "vector_length": ch.n,
                   "sigma": list(ch.sigma), "include_isolated": include_isolated},
        "quantity": "omega",
        "case": case,
        "oracle_limit": total,
        "answer_bits": list(bits),
        "phases": [i * block for i in range(parties)],
        "layers": layers,
        "leftovers": leftovers,
        "landmarks": landmarks,
    }
    out = _vertex_events(total, adj)
    return GadgetOutput(StreamData("vertex", out), meta, 4 * c - 1, 4 * c * c)


def coloring_certificate(g: GadgetOutput, c: int | None = None) -> list[int]:
    """Proper 4c-colouring of an all-zeros chained-clique instance.

    Answer clique ``K^i_{sigma_i}`` gets colour ``i - 1``; every other vertex
    of a party gets colour ``2c + layer - 1`` and leftovers ``2c``.
    """
    meta = g.metadata
    if meta.get("gadget") != "chained-clique":
        raise GadgetError("colouring certificate applies to chained-clique instances only")
    c = meta["params"]["c"] if c is None else c
    if c != meta["params"]["c"]:
        raise GadgetError(f"instance was built for c={meta['params']['c']}, not {c}")
    if any(meta["answer_bits"]):
        raise GadgetError("an answer clique is present, so no 4c-colouring exists "
                          f"(clique of size {4 * c * c} in the all-ones case)")
    parties = 2 * c
    graph = g.graph()
    colour = [-1] * graph.n
    for i in range(parties):
        for layer, grp in enumerate(meta["layers"][i]):
            for v in grp:
                colour[v] = parties + layer
        for v in meta["leftovers"][i]:
            colour[v] = parties
    for i in range(1, parties):
        for v in g.landmarks[f"K{i}_{meta['params']['sigma'][i - 1]}"]:
            colour[v] = i - 1
    if not is_proper_coloring(graph, colour):
        raise GadgetError("constructed colouring is not proper")
    return colour
