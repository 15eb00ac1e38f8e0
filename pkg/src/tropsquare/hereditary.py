"""Upward-closed subsets of the lattice quadrant N x N.

An upward-closed ("hereditary") set is stored by its antichain of minimal
points, which is always finite (Dickson's lemma) and unique, so equality
is decidable and cheap.  Union is the idempotent addition and pointwise
sum of members (Minkowski sum of up-sets) is the multiplication; together
they form a commutative semiring of characteristic one with the empty set
as zero and the full quadrant ``{(0,0)}`` as one.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .errors import ZeroScale
from .scalars import INF, as_scalar
from .semiring import Semiring


def minimal_points(points) -> tuple[tuple[int, int], ...]:
    """Antichain of minimal points of the up-set generated by ``points``.

    Sorted with first coordinate ascending (hence second strictly
    descending): the staircase reading order.
    """
    pts = sorted({(int(a), int(b)) for a, b in points})
    if pts and (pts[0][0] < 0 or min(b for _, b in pts) < 0):
        raise ValueError("points must have non-negative coordinates")
    out = []
    best = None
    for a, b in pts:
        if best is None or b < best:
            out.append((a, b))
            best = b
    return tuple(out)


class HereditarySet:
    """Up-set of N x N represented by its minimal-point staircase."""

    __slots__ = ("generators",)

    def __init__(self, points=()):
        object.__setattr__(self, "generators", minimal_points(points))

    @classmethod
    def _wrap(cls, canonical: tuple) -> "HereditarySet":
        out = object.__new__(cls)
        object.__setattr__(out, "generators", canonical)
        return out

    def __setattr__(self, name, value):
        raise AttributeError("HereditarySet is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, a: int, b: int) -> bool:
        return any(ga <= a and gb <= b for ga, gb in self.generators)

    def __eq__(self, other):
        if not isinstance(other, HereditarySet):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"HereditarySet({list(self.generators)})"

    # -- semiring operations ---------------------------------------------

    def __add__(self, other: "HereditarySet") -> "HereditarySet":
        """Union, re-canonicalized."""
        return HereditarySet._wrap(minimal_points(self.generators + other.generators))

    def __mul__(self, other: "HereditarySet") -> "HereditarySet":
        """Pointwise sums of members: Minkowski sum of the up-sets."""
        sums = [
            (a + c, b + d) for a, b in self.generators for c, d in other.generators
        ]
        return HereditarySet._wrap(minimal_points(sums))

    def scale(self, n: int, m: int) -> "HereditarySet":
        """Coordinatewise scaling (a, b) -> (n*a, m*b); an endomorphism."""
        if n < 1 or m < 1:
            raise ZeroScale(f"scaling factors must be >= 1, got ({n}, {m})")
        # strictly monotone scaling preserves the staircase order
        return HereditarySet._wrap(tuple((n * a, m * b) for a, b in self.generators))

    # -- evaluations -------------------------------------------------------

    def min_degree(self):
        """Least total degree a + b over the set; INF for the empty set.

        This is the image under the diagonal evaluation, a semiring
        morphism onto the naturals with infinity.
        """
        if self.is_zero:
            return INF
        return min(a + b for a, b in self.generators)

    def weighted_minimizer(self, weight):
        """(min of weight*a + b, achieving generator); (INF, None) if empty.

        Ties resolve to the first generator in staircase order.
        """
        if self.is_zero:
            return INF, None
        w = weight if isinstance(weight, (int, Fraction)) else as_scalar(weight)
        best = None
        arg = None
        for a, b in self.generators:
            val = w * a + b
            if best is None or val < best:
                best, arg = val, (a, b)
        return best, arg

    def weighted_degree(self, weight):
        """Least weighted degree ``weight*a + b`` over the generators."""
        return self.weighted_minimizer(weight)[0]

    # -- windows -----------------------------------------------------------

    def rasterize(self, window: int) -> np.ndarray:
        """Membership table on [0, window) x [0, window); entry [a, b]."""
        if window < 1:
            raise ValueError("window must be >= 1")
        grid = np.zeros((window, window), dtype=bool)
        for a, b in self.generators:
            if a < window and b < window:
                grid[a:, b:] = True
        return grid

    def max_coordinate(self) -> int:
        if self.is_zero:
            return 0
        return max(max(a, b) for a, b in self.generators)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"generators": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, obj) -> "HereditarySet":
        return cls(obj["generators"])


ZERO_SET = HereditarySet()
UNIT_SET = HereditarySet([(0, 0)])


def random_set(rng: random.Random, max_coord: int = 9, max_gens: int = 4) -> HereditarySet:
    if rng.random() < 0.08:
        return ZERO_SET
    k = rng.randint(1, max_gens)
    return HereditarySet(
        [(rng.randint(0, max_coord), rng.randint(0, max_coord)) for _ in range(k)]
    )


def hereditary_semiring(max_coord: int = 9, max_gens: int = 4) -> Semiring:
    return Semiring(
        name="hereditary-square",
        zero=ZERO_SET,
        one=UNIT_SET,
        add=HereditarySet.__add__,
        mul=HereditarySet.__mul__,
        sample=lambda rng: random_set(rng, max_coord, max_gens),
        encode=HereditarySet.to_json,
    )
