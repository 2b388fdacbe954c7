"""Approximate-order sets, tail unions, and the prime decomposition.

Run: python demos/02_approximate_order.py
"""

from fractions import Fraction

from circlelab import (
    All,
    NotDiv,
    Power,
    TailUnionSpec,
    approx_order_set,
    check_inclusion_i,
    check_inclusion_iv,
    circle_point,
    finite_order_points,
    gallagher_decomposition,
    tail_union,
    totient,
)

# The points of order n are the reduced fractions m/n.
print("order-5 points:", [str(p) for p in finite_order_points(5)])

# Thickening them by delta gives totient(n) arcs of length 2*delta.
s5 = approx_order_set(5, Fraction(1, 100))
print("AO(5, 1/100):", s5)
print("arc count:", len(s5.arcs), "== totient(5) =", totient(5), " measure:", s5.measure)

# A tail union collects AO(i, delta_i) over a truncated index range,
# optionally filtered by a divisibility predicate.
delta = Power(Fraction(1), 2)  # delta_n = 1/n^2
w = tail_union(TailUnionSpec(2, 50, All(), delta))
print("\ntail union over 2..50 with delta_n = 1/n^2:")
print("  arcs:", len(w.arcs), " measure:", w.measure)

odd_only = tail_union(TailUnionSpec(2, 50, NotDiv(2), delta))
print("  restricted to odd orders, measure:", odd_only.measure)

# Scaling and translating approximate-order sets stays inside coarser ones;
# these containments hold exactly, arc by arc.
print("\n2 * AO(3, 1/100) inside AO(3, 2/100):", check_inclusion_i(2, 3, Fraction(1, 100)))
print(
    "[1/3] + AO(9, 1/100) equals AO(9, 1/100):",
    check_inclusion_iv(circle_point("1/3"), 9, Fraction(1, 100)),
)

# Splitting indices by divisibility at a prime p partitions the union.
for p in (2, 3, 5):
    a, b, c = gallagher_decomposition(p, 2, 50, delta)
    print(
        f"p={p}: measures A={a.measure} B={b.measure} C={c.measure}  "
        f"A|B|C == whole: {(a | b | c) == w}"
    )
