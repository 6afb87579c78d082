"""
Why the alternating labelling is needed
=======================================

Under the standard labelling, reading off initial points is not injective
on maximal parts: a fan of diagonals from one vertex yields the saturated
partition (mn, ..., m) although it uses none of the snake diagonals.
"""

from fusscat import fan_dissection, negative_roots_contained, psi_prime, snake_dissection
from fusscat import standard_labeling

for n in (3, 4):
    m = 2
    poly = standard_labeling(n, m)
    fan = fan_dissection(poly, m * (n + 1) + 1)
    snake = snake_dissection(poly)
    print(f"n={n}, m={m}")
    print("  fan   ", sorted(fan.diagonals), "->", psi_prime(fan).parts,
          "snake diagonals used:", len(negative_roots_contained(fan)))
    print("  snake ", sorted(snake.diagonals), "->", psi_prime(snake).parts)
