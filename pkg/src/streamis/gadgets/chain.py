"""Chained-index and pointer-jumping instances, and the reduction between them.

Indices into vectors and pointer tables are 1-based, as in the
communication problems themselves; vectors are stored as 0-based tuples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..errors import GadgetError


@dataclass(frozen=True)
class ChainInstance:
    """k-party chained index: vectors X[0..k-2], indices sigma[0..k-2], promised answer z.

    The constructor enforces ``X[i][sigma[i] - 1] == z`` for every i. Use
    :meth:`unchecked` to build promise-violating instances on purpose.
    """

    k: int
    n: int
    X: tuple[tuple[int, ...], ...]
    sigma: tuple[int, ...]
    z: int

    def __post_init__(self):
        self._validate_shape()
        bad = [i for i in range(self.k - 1) if self.X[i][self.sigma[i] - 1] != self.z]
        if bad:
            raise GadgetError(f"promise violated at parties {[i + 1 for i in bad]}")

    def _validate_shape(self):
        object.__setattr__(self, "X", tuple(tuple(int(b) for b in x) for x in self.X))
        object.__setattr__(self, "sigma", tuple(self.sigma))
        if self.k < 2:
            raise GadgetError("chained index needs at least two parties")
        if len(self.X) != self.k - 1 or len(self.sigma) != self.k - 1:
            raise GadgetError("need k-1 vectors and k-1 indices")
        for x in self.X:
            if len(x) != self.n or any(b not in (0, 1) for b in x):
                raise GadgetError(f"vectors must be binary of length {self.n}")
        if any(not 1 <= s <= self.n for s in self.sigma):
            raise GadgetError(f"indices must lie in [1, {self.n}]")
        if self.z not in (0, 1):
            raise GadgetError("answer bit must be 0 or 1")

    @classmethod
    def unchecked(cls, k, n, X, sigma, z) -> "ChainInstance":
        inst = object.__new__(cls)
        for name, value in zip(("k", "n", "X", "sigma", "z"), (k, n, X, sigma, z)):
            object.__setattr__(inst, name, value)
        inst._validate_shape()
        return inst

    def promise_holds(self) -> bool:
        return all(self.X[i][self.sigma[i] - 1] == self.z for i in range(self.k - 1))

    def answer_bits(self) -> tuple[int, ...]:
        return tuple(self.X[i][self.sigma[i] - 1] for i in range(self.k - 1))

    @classmethod
    def random(cls, k: int, n: int, z: int, rng: random.Random, fill: int | None = None) -> "ChainInstance":
        """Promise instance with random indices; non-answer bits random, or all ``fill``."""
        sigma = tuple(rng.randint(1, n) for _ in range(k - 1))
        X = []
        for s in sigma:
            x = [rng.randint(0, 1) if fill is None else fill for _ in range(n)]
            x[s - 1] = z
            X.append(tuple(x))
        return cls(k, n, tuple(X), sigma, z)


@dataclass(frozen=True)
class JumpInstance:
    """Boolean conservative k-party pointer jumping.

    ``f`` holds the tables f_2, ..., f_k in order: f_2..f_{k-1} map [n] to
    [n] (1-based values) and f_k maps [n] to {0, 1}. Table entry ``j - 1``
    is the image of ``j``.
    """

    n: int
    k: int
    alpha: int
    f: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(tuple(t) for t in self.f))
        if self.k < 2:
            raise GadgetError("pointer jumping needs at least two parties")
        if not 1 <= self.alpha <= self.n:
            raise GadgetError(f"start pointer must lie in [1, {self.n}]")
        if len(self.f) != self.k - 1:
            raise GadgetError(f"need {self.k - 1} tables f_2..f_k, got {len(self.f)}")
        for idx, table in enumerate(self.f):
            if len(table) != self.n:
                raise GadgetError(f"table f_{idx + 2} has length {len(table)}, expected {self.n}")
            final = idx == len(self.f) - 1
            ok = all(v in (0, 1) for v in table) if final else all(1 <= v <= self.n for v in table)
            if not ok:
                raise GadgetError(f"table f_{idx + 2} has out-of-range entries")

    def table(self, i: int) -> tuple[int, ...]:
        return self.f[i - 2]

    def compose(self, i: int, j: int, x: int) -> int:
        """f_{i:j}(x): apply f_i first, then f_{i+1}, ..., f_j. Identity when j < i."""
        for t in range(i, j + 1):
            x = self.table(t)[x - 1]
        return x

    def output(self) -> int:
        return self.compose(2, self.k, self.alpha)

    @classmethod
    def random(cls, n: int, k: int, rng: random.Random) -> "JumpInstance":
        f = [tuple(rng.randint(1, n) for _ in range(n)) for _ in range(k - 2)]
        f.append(tuple(rng.randint(0, 1) for _ in range(n)))
        return cls(n, k, rng.randint(1, n), tuple(f))


def jump_to_chain(j: JumpInstance) -> ChainInstance:
    """Zero-communication reduction: X^(i)_t = f_{i+1:k}(t), sigma_i = f_{2:i}(alpha)."""
    X = tuple(
        tuple(j.compose(i + 1, j.k, t) for t in range(1, j.n + 1))
        for i in range(1, j.k)
    )
    sigma = tuple(j.compose(2, i, j.alpha) for i in range(1, j.k))
    return ChainInstance(j.k, j.n, X, sigma, j.output())
