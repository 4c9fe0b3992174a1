import itertools
import random

import pytest

from streamis.core import complement_stream, exact_alpha, exact_omega, is_clique, is_proper_coloring, materialize
from streamis.errors import GadgetError
from streamis.gadgets import (
    ChainInstance,
    clique_gadget,
    coloring_certificate,
    find_prime,
    gen_chained_clique_instance,
    minimal_party_size,
    verify_gap,
)


def test_find_prime():
    assert find_prime(4, 8) == 5
    assert find_prime(6, 12) == 7
    with pytest.raises(GadgetError):
        find_prime(24, 28)


def test_preconditions():
    with pytest.raises(GadgetError):
        clique_gadget(8, 1)
    with pytest.raises(GadgetError):
        clique_gadget(16, 0)
    assert minimal_party_size(2) == 33


def test_m16_c1_is_k55():
    cg = clique_gadget(16, 1)
    assert cg.p == 5 and len(cg.cliques) == 25
    g = cg.graph()
    assert sorted(g.edges()) == sorted((u, v) for u in range(5) for v in range(5, 10))
    assert exact_omega(g)[0] == 2


def test_m48_c2():
    cg = clique_gadget(48, 2)
    assert cg.p == 7 and len(cg.cliques) == 49
    assert exact_omega(cg.graph())[0] == 4


def _edge_sets(cg):
    return [set(itertools.combinations(sorted(k), 2)) for k in cg.cliques.values()]


@pytest.mark.parametrize("m,c", [(16, 1), (30, 1), (48, 2), (60, 2), (90, 3), (120, 3)])
def test_packing_properties(m, c):
    cg = clique_gadget(m, c)
    assert 2 * c < cg.p and -(-m // (4 * c)) <= cg.p <= m // (2 * c)
    assert len(cg.cliques) == cg.p ** 2 >= m * m / (16 * c * c)
    sets = _edge_sets(cg)
    for a, b in itertools.combinations(range(len(sets)), 2):
        assert not sets[a] & sets[b]
    vs = [set(k) for k in cg.cliques.values()]
    assert all(len(a & b) <= 1 for a, b in itertools.combinations(vs, 2))
    g = cg.graph()
    assert g.m == len(cg.cliques) * c * (2 * c - 1)
    for grp in cg.groups:
        assert not any(g.has_edge(u, v) for u, v in itertools.combinations(grp, 2))
    assert all(not g.neighbors(v) for v in cg.leftovers)
    assert exact_omega(g, limit=None)[0] == 2 * c


def test_polynomials_share_at_most_one_point():
    p = 7
    evals = {(a, b): [(a * i + b) % p for i in range(1, 5)] for a in range(p) for b in range(p)}
    for P, Q in itertools.combinations(evals, 2):
        assert sum(x == y for x, y in zip(evals[P], evals[Q])) <= 1


def test_drop_isolated():
    cg = clique_gadget(33, 2, include_isolated=False)
    assert cg.m == 20 and not cg.leftovers


@pytest.fixture(scope="module")
def instances():
    rng = random.Random(2)
    return {z: gen_chained_clique_instance(ChainInstance.random(4, 25, z, rng)) for z in (0, 1)}


def test_all_ones_contains_big_clique(instances):
    g = instances[1]
    wit = g.landmarks["witness"]
    assert len(wit) == 16 and is_clique(g.graph(), wit)
    assert verify_gap(g).passed


def test_all_zeros_small_clique(instances):
    g = instances[0]
    assert g.graph().n == 132
    assert exact_omega(g.graph(), limit=None)[0] <= 7


def test_coloring_certificate(instances):
    col = coloring_certificate(instances[0])
    assert is_proper_coloring(instances[0].graph(), col) and len(set(col)) <= 8
    with pytest.raises(GadgetError):
        coloring_certificate(instances[1])


def test_no_intra_layer_edges(instances):
    for g in instances.values():
        graph = g.graph()
        for party in g.metadata["layers"]:
            for layer in party:
                assert not any(graph.has_edge(u, v) for u, v in itertools.combinations(layer, 2))


def test_vertex_stream_contract_and_phases(instances):
    g = instances[1]
    materialize(g.events)  # raises on forward references
    assert g.phases == [0, 33, 66, 99]


def test_complement_swaps_alpha_and_omega():
    rng = random.Random(8)
    g = gen_chained_clique_instance(ChainInstance.random(4, 25, 1, rng), include_isolated=False)
    comp = materialize(complement_stream(g.events))
    assert exact_alpha(comp, limit=None)[0] == exact_omega(g.graph(), limit=None)[0] == 16


def test_capacity_exceeded():
    rng = random.Random(0)
    with pytest.raises(GadgetError):
        gen_chained_clique_instance(ChainInstance.random(4, 26, 1, rng))
    with pytest.raises(GadgetError):
        gen_chained_clique_instance(ChainInstance.random(4, 4, 1, rng), n=130)
