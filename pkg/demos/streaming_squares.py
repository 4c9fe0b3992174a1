"""
Independent sets of unit squares in one pass
============================================

Greedy, the strip decomposition and the sketch-based estimator on the same
random stream of unit squares, compared against the exact answer.
"""

import random

from streamis.algorithms import alpha_estimator_3eps, greedy_mis, unit_square_mis_3approx
from streamis.core import exact_alpha, intersection_graph
from streamis.harness.generators import planted_squares, random_unit_squares

rng = random.Random(7)
squares = random_unit_squares(80, 60, rng, r=1)
g = intersection_graph(squares)
alpha = exact_alpha(g, limit=None)[0]
print(f"{len(squares)} squares, alpha = {alpha}")

# greedy keeps every square that misses all kept ones
res = greedy_mis(squares)
print(f"greedy      size {len(res.selected):3d}  peak items {res.space.peak_items}")

# six shifted strip partitions, at most two squares stored per strip
res = unit_square_mis_3approx(squares)
print(f"strips      size {len(res.selected):3d}  peak items {res.space.peak_items}")

# the estimator only reports a number, but its memory does not grow with n
for n_clusters in (100, 1000, 10000):
    big, a = planted_squares(n_clusters, random.Random(n_clusters))
    est = alpha_estimator_3eps(big, eps=0.5, seed=1)
    print(f"estimator   n={len(big):6d} alpha={a:6d} estimate={est.estimate:9.1f} "
          f"peak items {est.space.peak_items}")
