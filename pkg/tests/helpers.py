"""Independent oracles shared by the test modules.

Nothing here reuses the code paths under test: membership and hulls are
decided by direction-grid exposure over rasterized windows, Minkowski
sums by shifting bit matrices, and scalar signs by 100-digit interval
arithmetic.
"""

from __future__ import annotations

import random

import numpy as np
from mpmath import iv

from tropsquare import ExactScalar, HereditarySet, as_scalar

iv.dps = 100


def interval_value(x: ExactScalar):
    """Evaluate a + b*sqrt(d) in 100-digit interval arithmetic."""
    x = as_scalar(x)
    v = iv.mpf(x.a.numerator) / x.a.denominator
    if x.b:
        v += (iv.mpf(x.b.numerator) / x.b.denominator) * iv.sqrt(x.d)
    return v


def interval_sign(x, y) -> int:
    """Sign of x - y decided from separate interval evaluations.

    Returns 0 when the difference interval straddles zero, which at this
    precision only happens for genuinely equal values.
    """
    diff = interval_value(x) - interval_value(y)
    if diff > 0:
        return 1
    if diff < 0:
        return -1
    return 0


# -- lattice-region oracles ---------------------------------------------------


def _directions(window: int, for_membership: bool = False) -> np.ndarray:
    hi = window + 1 if for_membership else 2 * window + 2
    ws = [(i, j) for i in range(hi) for j in range(hi)]
    return np.array(ws[1:], dtype=np.int64)  # drop (0, 0)


def exposed_points(cells, window: int) -> list[tuple[int, int]]:
    """Extreme points of conv(cells) + quadrant, by strict exposure.

    A cell is extreme iff some direction with positive components makes
    it the unique minimizer; directions up to 2*window + 1 per component
    include a separating mediant for every candidate vertex.
    """
    pts = np.array(sorted(set(map(tuple, cells))), dtype=np.int64)
    if len(pts) == 0:
        return []
    ws = _directions(window)
    dots = pts @ ws.T
    mins = dots.min(axis=0)
    achieved = dots == mins
    unique = achieved.sum(axis=0) == 1
    exposed = (achieved & unique).any(axis=1)
    return [tuple(p) for p in pts[exposed]]


def region_contains(points, cell, window: int) -> bool:
    """Membership of cell in conv(points) + quadrant.

    Uses the support characterization over all directions with components
    up to the window, which includes every edge normal of the hull.
    """
    pts = np.array(sorted(set(map(tuple, points))), dtype=np.int64)
    if len(pts) == 0:
        return False
    ws = _directions(window, for_membership=True)
    cell = np.asarray(cell, dtype=np.int64)
    return bool(((ws @ cell) >= (pts @ ws.T).min(axis=0)).all())


def raster_minkowski(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Minkowski sum of two bit matrices, truncated to the shared window."""
    n = a.shape[0]
    out = np.zeros_like(a)
    for x, y in np.argwhere(a):
        out[x:, y:] |= b[: n - x, : n - y]
    return out


# -- random inputs ------------------------------------------------------------


def random_points(rng: random.Random, max_coord: int, k: int) -> list[tuple[int, int]]:
    return [(rng.randint(0, max_coord), rng.randint(0, max_coord)) for _ in range(k)]


def random_hset(rng: random.Random, max_coord: int = 9, max_gens: int = 4) -> HereditarySet:
    if rng.random() < 0.06:
        return HereditarySet()
    return HereditarySet(random_points(rng, max_coord, rng.randint(1, max_gens)))
