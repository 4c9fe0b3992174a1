import itertools
import random

import pytest
from hypothesis import HealthCheck, settings

from streamis.core import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def naive_alpha(g: Graph) -> int:
    """Largest independent subset by trying every subset, largest first."""
    for size in range(g.n, -1, -1):
        for sub in itertools.combinations(range(g.n), size):
            if all(not g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                return size
    return 0


def naive_chi(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in g.edges()):
                return k
    return g.n


def random_graph(n: int, density: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density])


@pytest.fixture
def rng():
    return random.Random(12345)
