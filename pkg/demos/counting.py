"""
Counting three families at once
===============================

Staircase partitions, dominant regions and polygon dissections share the
same Fuss-Catalan numbers.  We enumerate each family and compare.
"""

import numpy as np

from fusscat import count_partitions, count_positive, enumerate_dissections
from fusscat import enumerate_partitions, enumerate_regions, max_parts, wall_profile

# one row per (n, m): formula, partitions, regions, dissections
rows = []
for n in range(1, 5):
    for m in range(1, 4):
        rows.append((n, m, count_partitions(n, m),
                     sum(1 for _ in enumerate_partitions(n, m)),
                     sum(1 for _ in enumerate_regions(n, m)),
                     sum(1 for _ in enumerate_dissections(n, m))))
table = np.array(rows)
print(" n  m  formula  partitions  regions  dissections")
for r in table:
    print("{:2d} {:2d} {:8d} {:11d} {:8d} {:12d}".format(*r))
assert (table[:, 2:] == table[:, 2:3]).all()

# the bounded part: no maximal part, no simple wall
n, m = 3, 2
positive = sum(1 for p in enumerate_partitions(n, m) if not max_parts(p))
bounded = sum(1 for t in enumerate_regions(n, m) if wall_profile(t).bounded)
print(f"\nn={n}, m={m}: {positive} positive partitions, {bounded} bounded regions, "
      f"formula {count_positive(n, m)}")

# exact integers stay exact far beyond enumeration range
print("N(30, 5) =", count_partitions(30, 5))
