"""
Hard instances, checked exactly
===============================

Each gadget encodes a communication problem so that a small change in one
party's input moves alpha or omega across a gap. The exact oracles confirm
both sides of every gap on small sizes.
"""

import random

from streamis.core import exact_alpha
from streamis.gadgets import (
    ChainInstance,
    coloring_certificate,
    gen_chained_clique_instance,
    gen_explicit_interval_gadget,
    gen_square_chain3_gadget,
    gen_strip_region_gadget,
    verify_gap,
)

# index problem as intervals: alpha is 5 when the queried bit is set, else 3
X = [1, 0, 1, 1]
for sigma in (1, 2):
    g = gen_explicit_interval_gadget(X, sigma)
    print(f"intervals  X={X} sigma={sigma}: alpha = {exact_alpha(g.graph())[0]}")

# the same idea with squares inside a bounded region
for sigma in (1, 2):
    g = gen_strip_region_gadget(X, sigma)
    print(f"region     X={X} sigma={sigma}: alpha = {exact_alpha(g.graph())[0]}")

# three-party chain: 5k against at most 2k + 2
rng = random.Random(0)
for z in (1, 0):
    ch = ChainInstance.random(3, 3, z, rng)
    g = gen_square_chain3_gadget(ch, kreps=2)
    print(f"chain3     z={z}: alpha = {exact_alpha(g.graph(), limit=None)[0]} "
          f"(gap {g.expected_low} / {g.expected_high})")

# clique chain for four parties: omega 16 against 7, with an 8-colouring
for z in (1, 0):
    g = gen_chained_clique_instance(ChainInstance.random(4, 25, z, rng, fill=z))
    rep = verify_gap(g)
    print(f"cliques    z={z}: omega = {rep.value}, claim holds: {rep.passed}")
    if z == 0:
        print(f"           colouring uses {len(set(coloring_certificate(g)))} colours")
