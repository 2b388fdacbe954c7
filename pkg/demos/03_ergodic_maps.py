"""Affine circle maps: exact preimages, invariance, and conjugation.

Run: python demos/03_ergodic_maps.py
"""

import random
from fractions import Fraction

from circlelab import AffineCircleMap, ArcSet, arc, circle_point, conjugation_check, invariant_set_search

# The doubling map y -> 2y pulls a quarter arc back to two eighth arcs,
# so its preimages preserve measure even though the map stretches.
double = AffineCircleMap(2)
quarter = ArcSet.from_arcs([arc(0, "1/4")])
pre = double.preimage(quarter)
print("preimage of [0,1/4) under y -> 2y:", pre)
print("measures agree:", pre.measure, "==", quarter.measure)

# The same holds for any multiplier >= 1 and any offset; spot-check a few
# random sets exactly.
rng = random.Random(1)
t = AffineCircleMap(5, circle_point("2/3"))
sample = []
for _ in range(50):
    d = rng.randint(1, 24)
    sample.append(ArcSet.from_arcs([arc(Fraction(rng.randrange(d), d), Fraction(rng.randint(1, d), d))]))
print("y -> 5y + 2/3 preserves measure on 50 random sets:", t.preserves_measure_on(sample))

# Which unions of grid cells are exactly invariant?  For multipliers >= 2
# only the empty set and the full circle survive; the identity fixes
# everything; a half rotation fixes the two alternating cell pairs.
print("\ninvariant grid-cell unions:")
print("  y -> 2y on the 1/8 grid:   ", [str(s) for s in invariant_set_search(AffineCircleMap(2), 8)])
print("  y -> 3y on the 1/9 grid:   ", [str(s) for s in invariant_set_search(AffineCircleMap(3), 9)])
half_rot = AffineCircleMap(1, circle_point("1/2"))
print("  y -> y + 1/2 on the 1/4 grid:")
for s in invariant_set_search(half_rot, 4):
    print("    ", s)

# y -> ny + x is conjugate to y -> ny via translation by x/(n-1);
# verified pointwise in exact arithmetic.
ys = [circle_point(Fraction(rng.randrange(97), 97)) for _ in range(25)]
print("\nconjugation identity for n=3, x=[1/2]:", conjugation_check(3, circle_point("1/2"), ys))
