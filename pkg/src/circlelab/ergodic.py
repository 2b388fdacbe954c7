"""Affine maps of the circle: exact preimages, invariance, and grid searches.

The map y -> n*y + x preserves arc-length measure for every n >= 1, and for
n >= 2 admits no nontrivial exactly-invariant set.  Neither is provable by
finite computation in full generality; this module instead provides the
exact preimage machinery, measure-preservation self-checks, and a
brute-force search for invariant sets among unions of grid cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arcs import ONE, ZERO, ArcSet, union_all
from .circle import ZERO_POINT, CirclePoint


@dataclass(frozen=True)
class AffineCircleMap:
    """The map y -> multiplier * y + offset on the circle."""

    multiplier: int
    offset: CirclePoint = ZERO_POINT

    def __post_init__(self) -> None:
        if self.multiplier < 0:
            raise ValueError(f"multiplier must be a natural number, got {self.multiplier}")

    def __call__(self, y: CirclePoint) -> CirclePoint:
        return self.multiplier * y + self.offset

    apply = __call__

    def preimage(self, s: ArcSet) -> ArcSet:
        """Exact inverse image; each arc pulls back to multiplier sub-arcs.

        Measure is preserved exactly for multiplier >= 1.  A multiplier of 0
        is rejected: the constant map's preimages are degenerate and not
        measure-preserving.
        """
        n = self.multiplier
        if n < 1:
            raise ValueError("preimage requires multiplier >= 1")
        x = self.offset.value
        raw = []
        for lo, hi in s.segments:
            base = (lo - x) % 1
            sub = (hi - lo) / n
            for k in range(n):
                start = (base + k) / n
                end = start + sub
                if end <= ONE:
                    raw.append((start, end))
                else:
                    raw.append((start, ONE))
                    raw.append((ZERO, end - 1))
        return ArcSet(tuple(raw))

    def preserves_measure_on(self, sample: Iterable[ArcSet]) -> bool:
        """Exact self-check: preimages of every sampled set keep its measure."""
        return all(self.preimage(s).measure == s.measure for s in sample)

    def is_invariant(self, s: ArcSet) -> bool:
        """True iff the preimage of s equals s as canonical ArcSets."""
        return self.preimage(s) == s


def grid_cells(denominator: int) -> list[ArcSet]:
    """The cells [j/k, (j+1)/k) of the uniform grid of the given denominator."""
    if denominator < 1:
        raise ValueError(f"grid denominator must be >= 1, got {denominator}")
    return [
        ArcSet(((Fraction(j, denominator), Fraction(j + 1, denominator)),))
        for j in range(denominator)
    ]


def invariant_set_search(
    t: AffineCircleMap, grid_denominator: int, *, prefilter: bool = True
) -> list[ArcSet]:
    """All unions of grid cells that the map leaves exactly invariant.

    Enumerates the 2**k cell subsets (k capped at 20), returning the
    invariant ones sorted by their cell bitmask.  The prefilter skips
    subsets violating the closure condition that each chosen cell's
    preimage may only touch chosen cells; every surviving candidate is
    still verified by the exact preimage equality, so the result is
    identical to the plain brute force.
    """
    k = grid_denominator
    if not 1 <= k <= 20:
        raise ValueError(f"grid denominator must lie in 1..20, got {k}")
    cells = grid_cells(k)
    pre = [t.preimage(c) for c in cells]
    touched = []
    for p in pre:
        mask = 0
        for j, c in enumerate(cells):
            if not (p & c).is_empty():
                mask |= 1 << j
        touched.append(mask)
    universe = (1 << k) - 1
    found = []
    for bits in range(1 << k):
        if prefilter and any(
            bits >> j & 1 and touched[j] & ~bits & universe for j in range(k)
        ):
            continue
        s = union_all(cells[j] for j in range(k) if bits >> j & 1)
        if t.preimage(s) == s:
            found.append(s)
    return found


def conjugation_check(n: int, x: CirclePoint, sample: Sequence[CirclePoint]) -> bool:
    """Self-check that translation by x/(n-1) conjugates y -> n*y + x to y -> n*y.

    The shift is computed from the canonical representative of x; any other
    representative differs by a point of order dividing n - 1, which
    conjugates the same pair of maps.  Must return True for every sample.
    """
    if n < 2:
        raise ValueError(f"conjugation needs multiplier >= 2, got {n}")
    shift = CirclePoint(x.value / (n - 1))
    g = AffineCircleMap(n, x)
    f = AffineCircleMap(n)
    return all(shift + g(y - shift) == f(y) for y in sample)
