"""Shared test utilities: random generators, independent oracles, golden files.

The membership oracle here deliberately avoids the ArcSet sweep machinery:
sets are probed pointwise with raw Fraction arithmetic on a common grid,
so measures of boolean combinations can be cross-checked against an
implementation that shares no code with the library's canonicalisation.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from pathlib import Path
from typing import Callable

from circlelab import Arc, ArcSet, CirclePoint, arc, format_fraction, parse_fraction

GOLDEN_PATH = Path(__file__).parent / "golden" / "measures.json"


# -- random generators -------------------------------------------------------


def rand_fraction(rng: random.Random, max_den: int = 32) -> Fraction:
    d = rng.randint(1, max_den)
    return Fraction(rng.randrange(d), d)


def rand_point(rng: random.Random, max_den: int = 32) -> CirclePoint:
    return CirclePoint(rand_fraction(rng, max_den))


def rand_arc(rng: random.Random, max_den: int = 32) -> Arc:
    d = rng.randint(1, max_den)
    start = Fraction(rng.randrange(d), d)
    length = Fraction(rng.randint(1, d), d)
    return arc(start, length)


def rand_arcset(rng: random.Random, max_arcs: int = 4, max_den: int = 32) -> ArcSet:
    return ArcSet.from_arcs(rand_arc(rng, max_den) for _ in range(rng.randint(0, max_arcs)))


def rand_grid_arcs(rng: random.Random, denom: int, max_arcs: int = 4) -> list[tuple[Fraction, Fraction]]:
    """Random (start, length) pairs with endpoints on the 1/denom grid."""
    out = []
    for _ in range(rng.randint(0, max_arcs)):
        start = Fraction(rng.randrange(denom), denom)
        length = Fraction(rng.randint(1, denom), denom)
        out.append((start, length))
    return out


# -- pointwise membership oracle ----------------------------------------------


def in_arc(x: Fraction, start: Fraction, length: Fraction) -> bool:
    """Membership in the half-open arc [start, start + length), mod 1."""
    return (x - start) % 1 < length


def circ_dist(x: Fraction, y: Fraction) -> Fraction:
    d = (x - y) % 1
    return min(d, 1 - d)


def grid_measure(member: Callable[[Fraction], bool], denom: int) -> Fraction:
    """Exact measure of a set that is a union of 1/denom grid cells.

    Probes the midpoint of every cell; valid whenever all boundary points
    of the set lie on the grid.
    """
    hits = sum(1 for j in range(denom) if member(Fraction(2 * j + 1, 2 * denom)))
    return Fraction(hits, denom)


# -- golden values --------------------------------------------------------------


def golden_check(name: str, value: Fraction) -> bool:
    """Compare against the frozen value, writing it on first encounter."""
    data = json.loads(GOLDEN_PATH.read_text()) if GOLDEN_PATH.exists() else {}
    if name not in data:
        data[name] = format_fraction(value)
        GOLDEN_PATH.parent.mkdir(exist_ok=True)
        GOLDEN_PATH.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
        return True
    return parse_fraction(data[name]) == value
