"""Two-generator numerical semigroups <n, m> with gcd(n, m) = 1.

The diagonal evaluation of a coordinate-scaled up-set lands in the set
{n*a + m*b}, so membership, the conductor bound (n-1)(m-1) and the gap
list below it describe exactly which exponents that evaluation can reach.
"""

from __future__ import annotations

from math import gcd


def _validate(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise ValueError(f"generators must be >= 1, got ({n}, {m})")
    if gcd(n, m) != 1:
        raise ValueError(f"generators must be coprime, got ({n}, {m})")


def represents(n: int, m: int, c: int) -> bool:
    """True iff c = n*a + m*b for some naturals a, b."""
    _validate(n, m)
    if c < 0:
        return False
    for a in range(c // n + 1):
        if (c - n * a) % m == 0:
            return True
    return False


def conductor(n: int, m: int) -> int:
    """(n-1)(m-1): everything from here up is representable."""
    _validate(n, m)
    return (n - 1) * (m - 1)


def gaps(n: int, m: int) -> list[int]:
    """Non-representable naturals below the conductor, ascending."""
    bound = conductor(n, m)
    return [c for c in range(bound) if not represents(n, m, c)]
