"""Tour of exact circle points and arc-set algebra.

Run: python demos/01_circle_and_arcs.py
"""

from fractions import Fraction

from circlelab import ArcSet, arc, circle_point, thicken

# Points live on the circle of circumference 1; construction reduces mod 1.
p = circle_point("7/3")
print("7/3 on the circle is", p)
print("its norm (distance to the nearest integer):", p.norm())
print("its order (least k with k*p = 0):", p.order())

q = circle_point("-1/4")
print("-1/4 normalizes to", q, "and 3 * [2/5] =", 3 * circle_point("2/5"))

# Arc sets: finite unions of half-open arcs with a unique canonical form.
left = ArcSet.from_arcs([arc(0, "1/4"), arc("1/4", "1/4")])  # adjacent arcs merge
print("\n[0,1/4) u [1/4,1/2) canonicalizes to:", left)

right = ArcSet.from_arcs([arc("1/4", "1/2")])
print("intersection:", left & right)
print("union:       ", left | right)
print("difference:  ", left - right)
print("complement:  ", ~left)

# Every measure is an exact rational; inclusion-exclusion holds on the nose.
lhs = (left | right).measure + (left & right).measure
rhs = left.measure + right.measure
print("\ninclusion-exclusion:", lhs, "==", rhs, "->", lhs == rhs)

# Arcs may wrap past 1; the canonical form splits at the seam internally
# and rejoins for display.
wrap = thicken([circle_point(0)], Fraction(1, 4))
print("\nthickening of {[0]} by 1/4:", wrap, " measure:", wrap.measure)
print("as JSON:", wrap.to_json())

# Translation and the multiplication image are exact as well.
print("\ntranslate [1/2,1) by [3/4]:", ArcSet.from_arcs([arc("1/2", "1/2")]).translate(circle_point("3/4")))
print("image of [0,1/4) under y -> 2y:", ArcSet.from_arcs([arc(0, "1/4")]).mul_image(2))
