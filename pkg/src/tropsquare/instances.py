"""Registry of the semiring instances exercised by the axiom harness."""

from __future__ import annotations

from fractions import Fraction

from .correspondence import germ_semiring, value_semiring
from .hereditary import hereditary_semiring
from .polygon import polygon_semiring
from .scalars import surd
from .semiring import BOOLEAN, INT_MIN_PLUS, NAT_MIN_PLUS, RATIONAL_MIN_PLUS, Semiring

STANDARD_SLOPES = (Fraction(1, 3), Fraction(2), Fraction(5, 7), surd(2))


def standard_instances() -> dict[str, Semiring]:
    """All built-in instances, keyed by name, in a stable order."""
    instances = [
        BOOLEAN,
        NAT_MIN_PLUS,
        INT_MIN_PLUS,
        RATIONAL_MIN_PLUS,
        hereditary_semiring(),
        polygon_semiring(),
        germ_semiring(),
    ]
    instances.extend(value_semiring(lam) for lam in STANDARD_SLOPES)
    return {sr.name: sr for sr in instances}
