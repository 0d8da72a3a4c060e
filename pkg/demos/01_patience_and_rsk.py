"""
Patience piles and the insertion bijection
==========================================

Walk one permutation through patience sorting, then through row insertion,
and watch the two bookkeeping devices agree on the same answer.
"""

from lislab import Permutation, lds, lis_patience, rsk_insert, rsk_inverse
from lislab.formats import grid_lines

perm = Permutation((2, 4, 3, 7, 6, 1, 5))
print(f"permutation: {', '.join(map(str, perm.elements))}")

# Patience sorting: deal cards left to right, each card goes on the leftmost
# pile whose top is larger.  The number of piles is the LIS length.
result = lis_patience(perm)
print(f"\npiles ({len(result.piles)} of them, so LIS length {result.lis_length}):")
for i, pile in enumerate(result.piles, start=1):
    print(f"  pile {i}: {list(pile)}")

# Row insertion builds a pair of same-shape tableaux instead of piles.
pair = rsk_insert(perm)
print("\ninsertion tableau P:")
for line in grid_lines(pair.p.rows):
    print(f"  {line}")
print("recording tableau Q:")
for line in grid_lines(pair.q.rows):
    print(f"  {line}")

# The first row of P plays the role of the pile tops, so its length is the
# LIS length again, and the number of rows is the longest decreasing run.
shape = pair.p.shape
print(f"\nshape: {shape.parts}")
print(f"first row length {shape.parts[0]} == patience LIS {result.lis_length}")
print(f"row count {shape.length} == LDS {lds(perm)}")

# The construction is reversible: the pair determines the permutation.
back = rsk_inverse(pair)
print(f"\ninverted pair -> {', '.join(map(str, back.elements))}")
assert back == perm
