"""Simple undirected graphs and vertex-set predicates."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from ..errors import StreamisError


@dataclass(frozen=True)
class Graph:
    """An n-vertex simple undirected graph on vertex ids ``0..n-1``.

    ``adj[v]`` is the neighbour set of ``v``.  Instances are immutable; use
    :meth:`from_edges` rather than building ``adj`` by hand.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    _bits: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise StreamisError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise StreamisError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise StreamisError(f"neighbour id {u} of {v} out of range")
                if v not in self.adj[u]:
                    raise StreamisError(f"asymmetric adjacency between {v} and {u}")
        bits = tuple(sum(1 << u for u in nbrs) for nbrs in self.adj)
        object.__setattr__(self, "_bits", bits)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise StreamisError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise StreamisError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(frozenset(r) for r in rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(frozenset() for _ in range(n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        everyone = frozenset(range(n))
        return cls(n, tuple(everyone - {v} for v in range(n)))

    @property
    def bits(self) -> tuple[int, ...]:
        """Adjacency rows as integer bitmasks (bit ``u`` of row ``v`` set iff uv is an edge)."""
        return self._bits

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def complement(self) -> "Graph":
        everyone = frozenset(range(self.n))
        return Graph(self.n, tuple(everyone - nbrs - {v} for v, nbrs in enumerate(self.adj)))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the old ids in order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = tuple(frozenset(index[u] for u in self.adj[v] if u in index) for v in keep)
        return Graph(len(keep), rows), keep

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            out.append(sorted(comp))
        return out


def _check_ids(g: Graph, s: Iterable[int]) -> frozenset[int]:
    members = frozenset(s)
    for v in members:
        if not 0 <= v < g.n:
            raise StreamisError(f"vertex id {v} out of range for n={g.n}")
    return members


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    members = _check_ids(g, s)
    return all(not (g.adj[v] & members) for v in members)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    members = _check_ids(g, s)
    return all(members - {v} <= g.adj[v] for v in members)


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    members = _check_ids(g, s)
    out = set(members)
    for v in members:
        out |= g.adj[v]
    return frozenset(out)


def is_maximal(g: Graph, s: Iterable[int]) -> bool:
    """True iff independent ``s`` dominates every vertex outside it.

    Raises if ``s`` is not independent: maximality is only defined for
    independent sets.
    """
    members = _check_ids(g, s)
    if not is_independent(g, members):
        raise StreamisError("is_maximal called on a set that is not independent")
    return len(closed_neighborhood(g, members)) == g.n


def delta_maximality(g: Graph, s: Iterable[int]) -> Fraction:
    """Fraction of vertices covered by ``s`` and its neighbours, as an exact rational."""
    if g.n == 0:
        raise StreamisError("delta_maximality undefined on the empty graph")
    members = _check_ids(g, s)
    if not is_independent(g, members):
        raise StreamisError("delta_maximality called on a set that is not independent")
    return Fraction(len(closed_neighborhood(g, members)), g.n)


def is_proper_coloring(g: Graph, coloring) -> bool:
    """``coloring`` maps every vertex (list index or dict key) to a colour."""
    if len(coloring) != g.n:
        return False
    return all(coloring[u] != coloring[v] for u, v in g.edges())
