"""
Hook lengths and tableau counting
=================================
"""

import math

from lislab import (
    Partition,
    check_syt_sum_identity,
    enumerate_syt,
    hook_lengths,
    max_syt_count,
    syt_count_hlf,
)
from lislab.formats import grid_lines

# Every cell of a diagram has a hook: itself, the cells to its right, and the
# cells below.  Writing the hook length into each cell gives a grid like this.
shape = Partition((3, 2, 2))
print(f"shape {shape.parts}, hook length grid:")
for line in grid_lines(hook_lengths(shape)):
    print(f"  {line}")

# n! divided by the product of all hooks counts the standard fillings.
count = syt_count_hlf(shape)
hooks = [h for row in hook_lengths(shape) for h in row]
print(f"\n7! / ({' * '.join(map(str, hooks))}) = {count} standard Young tableaux")

# Small enough shapes can be enumerated outright and the two answers compared.
small = Partition((3, 2))
tableaux = list(enumerate_syt(small))
print(f"\nall {len(tableaux)} tableaux of shape {small.parts}:")
for t in tableaux:
    print("  " + "  /  ".join(" ".join(map(str, row)) for row in t.rows))
assert len(tableaux) == syt_count_hlf(small)

# Summing the squared counts over every shape of n recovers n! exactly,
# which is the counting shadow of the insertion bijection from demo 01.
for n in (4, 8, 12):
    report = check_syt_sum_identity(n)
    print(f"\nn={n}: sum of squared counts = {report.sum_of_squares} "
          f"== {n}! is {report.ok}")
    assert report.sum_of_squares == math.factorial(n)

# The largest single count already grows fast.
for n in (6, 10, 14):
    best, value = max_syt_count(n)
    print(f"max count at n={n}: shape {best.parts} with {value} tableaux "
          f"(sqrt(n!) = {math.sqrt(math.factorial(n)):.1f})")
