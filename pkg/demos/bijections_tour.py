"""
Following one object through the bijections
===========================================

A partition becomes a Shi tableau (phi inverse), the tableau becomes a
dissection (omega inverse), and the dissection gives the partition back
through its initial points (psi).
"""

from fusscat import StaircasePartition, negative_roots_contained, omega_inverse, phi_inverse, psi
from fusscat import wall_profile

p = StaircasePartition(3, 3, (9, 4, 1))
print("partition      ", p.parts)

t = phi_inverse(p)
print("Shi tableau rows", t.rows)      # row i holds k_{i,i}, ..., k_{i,n}
print("row sums        ", tuple(map(sum, t.rows)))

d = omega_inverse(t)
print("dissection      ", sorted(d.diagonals))
print("initial points  ", psi(d).parts)

# the first part is maximal, so row 1 is a wall and the snake diagonal -a1 is used
print("simple walls    ", sorted(wall_profile(t).simple_walls))
print("snake diagonals ", sorted(negative_roots_contained(d)))
