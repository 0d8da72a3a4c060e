"""
Greedy paths and longest chains in a Poisson square
===================================================

Drop unit-rate Poisson points in a square of area n.  A greedy walker that
always hops to the nearest point up and to the right collects about
(pi/2) sqrt(n) points.  The true longest chain does better, reaching
2 sqrt(n), and comparing the two is the whole story of this module.
"""

import math

import numpy as np

from lislab import (
    expected_increasing_subsequences,
    greedy_ne_path,
    longest_chain,
    poisson_square,
    step_statistics,
)
from lislab.reports import child_seed, make_rng

AREA = 200_000.0
REPLICAS = 12

ratios = []
chains = []
paths = []
for i in range(REPLICAS):
    rng = make_rng(child_seed(404, i))
    points = poisson_square(AREA, rng)
    path = greedy_ne_path(points)
    paths.append(path)
    ratios.append(path.length / math.sqrt(AREA))
    chains.append(longest_chain(points) / math.sqrt(AREA))

print(f"{REPLICAS} replicas at area {AREA:.0f}:")
print(f"  greedy length / sqrt(n): {np.mean(ratios):.4f}   (pi/2 = {math.pi / 2:.4f})")
print(f"  longest chain / sqrt(n): {np.mean(chains):.4f}   (limit = 2)")

# Each greedy hop has a clean local law: the rectangle it clears has unit
# expected area, and the hop direction hugs the diagonal on average.
stats = step_statistics(paths)
print(f"\npooled over {stats.step_count} greedy steps:")
print(f"  mean hop radius  {stats.mean_radius:.4f}   (expected 1)")
print(f"  mean cos(angle)  {stats.mean_cos:.4f}   (2/pi = {2 / math.pi:.4f})")

# The upper bound side is a first-moment count: the expected number of
# increasing subsequences of length k in a uniform permutation is C(n,k)/k!,
# and once k passes e sqrt(n) that expectation collapses to nearly zero.
n = 1000
print(f"\nexpected counts of length-k increasing subsequences at n={n}"
      f" (e sqrt(n) = {math.e * math.sqrt(n):.1f}):")
for k in (60, 86, 96):
    value = float(expected_increasing_subsequences(n, k))
    print(f"  k={k}: about 10^{math.log10(value):.1f}")
print("a vanishing first moment past e sqrt(n) caps the scaled LIS above by e")
