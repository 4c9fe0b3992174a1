"""
Weighted unit squares
=====================

Weights spread over six orders of magnitude. Only a few weight classes per
strip are kept, yet the answer stays within a constant of the optimum.
"""

import random

from streamis.algorithms import weighted_space_bound, weighted_unit_square_3eps
from streamis.core import exact_alpha, exact_weighted_alpha, intersection_graph
from streamis.harness.generators import random_unit_squares

rng = random.Random(3)
eps = 0.5
for trial in range(5):
    bs = random_unit_squares(50, 30, rng, r=1, max_weight=10 ** 6)
    g = intersection_graph(bs)
    best = exact_weighted_alpha(g, [b.weight for b in bs.balls], limit=None)[0]
    res = weighted_unit_square_3eps(bs, eps)
    bound = weighted_space_bound(exact_alpha(g, limit=None)[0], eps)
    print(f"trial {trial}: weight {res.weight:8d} of {best:8d} ({res.weight / best:.2f}), "
          f"peak items {res.space.peak_items} <= {bound}")
