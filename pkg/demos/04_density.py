"""Balls, the doubling bound, and density ratios at a point.

Run: python demos/04_density.py
"""

from fractions import Fraction

from circlelab import (
    ArcSet,
    approx_order_set,
    arc,
    ball,
    circle_point,
    density_profile,
    density_ratio,
    doubling_check,
)

# Ball measure is min(1, 2*radius), exactly.
for r in (Fraction(1, 8), Fraction(1, 3), Fraction(3, 4)):
    b = ball(circle_point(0), r)
    print(f"ball radius {r}: measure {b.measure}")

# Doubling the radius at most doubles the measure (constant 2).
print("doubling bound at eps = 1/8, 1/3, 1/2:",
      [doubling_check(e) for e in (Fraction(1, 8), Fraction(1, 3), Fraction(1, 2))])

# Density ratios: fraction of a small ball occupied by a set.
half = ArcSet.from_arcs([arc(0, "1/2")])
print("\nratios for S = [0, 1/2):")
print("  interior point [1/4]:", density_ratio(half, circle_point("1/4"), Fraction(1, 8)))
print("  boundary point [1/2]:", density_ratio(half, circle_point("1/2"), Fraction(1, 8)))
print("  exterior point [3/4]:", density_ratio(half, circle_point("3/4"), Fraction(1, 8)))

# Shrinking the ball at a point inside the set drives the ratio to 1;
# here the profile stabilizes as soon as the ball fits inside one arc.
s = approx_order_set(5, Fraction(1, 100))
schedule = [Fraction(1, 50), Fraction(1, 100), Fraction(1, 200), Fraction(1, 400)]
print("\ndensity profile of AO(5, 1/100) at [1/5]:")
for eps, ratio in density_profile(s, circle_point("1/5"), schedule):
    print(f"  eps = {eps}: ratio = {ratio}")
