"""
Sampling random shapes and random tableaux
==========================================

Two different samplers target the same distribution on shapes: push a uniform
random permutation through row insertion, or grow the shape one cell at a
time with hook walks.  Both are checked against the exact law here.
"""

from collections import Counter
from fractions import Fraction

from lislab import (
    Partition,
    enumerate_partitions,
    hook_walk_corner,
    plancherel_prob,
    sample_shape_growth,
    sample_shape_rsk,
    sample_syt_hookwalk,
)
from lislab.plancherel import corner_removal_pmf
from lislab.reports import make_rng

N = 5
DRAWS = 20_000

print(f"exact shape law at n={N}:")
shapes = list(enumerate_partitions(N))
for lam in shapes:
    print(f"  {str(lam.parts):14s} {plancherel_prob(lam)}")
assert sum(plancherel_prob(lam) for lam in shapes) == Fraction(1)

rng = make_rng(20260817)
for name, sampler in (("insertion", sample_shape_rsk), ("growth", sample_shape_growth)):
    counts = Counter(sampler(N, rng).shape for _ in range(DRAWS))
    print(f"\n{name} sampler, {DRAWS} draws (empirical vs exact):")
    for lam in shapes:
        exact = float(plancherel_prob(lam))
        print(f"  {str(lam.parts):14s} {counts[lam] / DRAWS:.4f}  vs  {exact:.4f}")

# The hook walk drifts down and right inside a hook until it pins a corner.
# Its corner law is exactly the ratio of tableau counts, which is what makes
# deleting that corner a step of a uniform tableau sampler.
shape = Partition((3, 1))
pmf = corner_removal_pmf(shape)
walks = Counter(hook_walk_corner(shape, rng) for _ in range(DRAWS))
print(f"\nhook walk corners on {shape.parts}:")
for cell, p in pmf.items():
    print(f"  corner {cell}: empirical {walks[cell] / DRAWS:.4f}, exact {p}")

# Running the removal backward yields uniform standard tableaux.
tabs = Counter(sample_syt_hookwalk(Partition((3, 2)), rng).rows for _ in range(DRAWS))
print(f"\nuniform tableaux of (3, 2): {len(tabs)} distinct, "
      f"frequencies {sorted(round(v / DRAWS, 3) for v in tabs.values())}")
