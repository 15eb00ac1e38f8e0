"""Exact scalar tower used for all exponent arithmetic.

Three layers, all exact:

* ``INF`` — the absorbing top element of the natural numbers with infinity
  (neutral for ``min``, absorbing for ``+``).
* ``ExactScalar`` — numbers of the form ``a + b*sqrt(d)`` with rational
  ``a, b`` and squarefree ``d``; comparison is decided by sign rules and
  squaring, never by floating point.
* ``GermExponent`` — the germ at 0 of a piecewise-linear function
  ``eps -> base + slope*eps`` with one slope per side of 0.

Scalars over different radicands cannot be ordered exactly; those
comparisons raise :class:`~tropsquare.errors.IncompatibleRadicals`.
Equality, by contrast, is always decidable because the canonical form
``(a, b, d)`` is unique.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import IncompatibleRadicals


class Infinity:
    """Singleton top element: larger than every scalar, absorbing under +."""

    _instance = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __hash__(self):
        return hash(math.inf)

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __mul__(self, other):
        # Only reached with positive factors; callers validate positivity.
        return self

    __rmul__ = __mul__


INF = Infinity()


def _squarefree(n: int) -> tuple[int, int]:
    """Split n = s*s*f with f squarefree; returns (s, f)."""
    s, f = 1, 1
    k = 2
    while k * k <= n:
        e = 0
        while n % k == 0:
            n //= k
            e += 1
        s *= k ** (e // 2)
        if e % 2:
            f *= k
        k += 1
    return s, f * n


def _sign(q) -> int:
    return (q > 0) - (q < 0)


class ExactScalar:
    """Canonical quadratic surd ``a + b*sqrt(d)``.

    Canonical form: ``b == 0`` forces ``d == 0``; otherwise ``d`` is
    squarefree and at least 2.  Equality and hashing are structural, which
    matches value equality because the canonical form is unique.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=0):
        if isinstance(a, float) or isinstance(b, float):
            raise TypeError("exact scalars take int or Fraction parts, not float")
        a = Fraction(a)
        b = Fraction(b)
        d = int(d)
        if d < 0:
            raise ValueError("radicand must be non-negative")
        if b == 0 or d == 0:
            # b*sqrt(0) contributes nothing
            b, d = Fraction(0), 0
        else:
            s, f = _squarefree(d)
            b *= s
            d = f
            if d == 1:
                a += b
                b = Fraction(0)
                d = 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    # -- predicates ------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is irrational")
        return self.a

    def sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return _sign(a)
        if a == 0:
            return _sign(b)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        lhs, rhs = a * a, b * b * d
        assert lhs != rhs  # would make sqrt(d) rational
        if a > 0:
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, ExactScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactScalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_rational or o.is_rational or self.d == o.d:
            d = self.d or o.d
            return ExactScalar(self.a + o.a, self.b + o.b, d)
        raise IncompatibleRadicals(f"cannot add sqrt({self.d}) and sqrt({o.d}) terms")

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_rational:
            return ExactScalar(self.a * o.a, self.a * o.b, o.d)
        if o.is_rational:
            return ExactScalar(self.a * o.a, self.b * o.a, self.d)
        if self.d == o.d:
            return ExactScalar(
                self.a * o.a + self.b * o.b * self.d,
                self.a * o.b + self.b * o.a,
                self.d,
            )
        if self.a == 0 and o.a == 0:
            # pure radicals over different radicands stay quadratic
            return ExactScalar(0, self.b * o.b, self.d * o.d)
        raise IncompatibleRadicals(
            f"product of sqrt({self.d}) and sqrt({o.d}) expressions is not quadratic"
        )

    __rmul__ = __mul__

    def inverse(self) -> "ExactScalar":
        if self.sign() == 0:
            raise ZeroDivisionError("zero scalar has no inverse")
        if self.is_rational:
            return ExactScalar(1 / self.a)
        denom = self.a * self.a - self.b * self.b * self.d
        # denom == 0 would force sqrt(d) rational
        return ExactScalar(self.a / denom, -self.b / denom, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.a, self.b, self.d) == (o.a, o.b, o.d)

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def _diff_sign(self, other) -> int:
        return (self - other).sign()

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._diff_sign(o) < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._diff_sign(o) <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._diff_sign(o) > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._diff_sign(o) >= 0

    # -- conversions -----------------------------------------------------

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def floor(self) -> int:
        if self.is_rational:
            return math.floor(self.a)
        n = math.floor(float(self))
        while self < n:
            n -= 1
        while self >= n + 1:
            n += 1
        return n

    def __repr__(self):
        if self.is_rational:
            return f"ExactScalar({self.a})"
        return f"ExactScalar({self.a} + {self.b}*sqrt({self.d}))"

    def __str__(self):
        return format_scalar_spec(self)


def as_scalar(x) -> ExactScalar:
    """Coerce an int, Fraction or ExactScalar to ExactScalar."""
    if isinstance(x, ExactScalar):
        return x
    return ExactScalar(x)


def surd(d: int, coeff=1) -> ExactScalar:
    """The scalar ``coeff * sqrt(d)``."""
    return ExactScalar(0, coeff, d)


def sign_of(x) -> int:
    if isinstance(x, ExactScalar):
        return x.sign()
    return _sign(x)


# -- compact text form (used by the CLI and result serialization) --------

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")
_SURD_RE = re.compile(
    r"^(?:(?P<a>-?\d+(?:/\d+)?)\+)?(?:(?P<b>-?\d+(?:/\d+)?)\*)?sqrt:(?P<d>\d+)$"
)


def parse_scalar_spec(text: str) -> ExactScalar:
    """Parse ``p/q``, ``sqrt:d`` or ``a+b*sqrt:d`` into an ExactScalar."""
    text = text.strip()
    m = _RATIONAL_RE.match(text)
    if m:
        num, den = int(m.group(1)), int(m.group(2) or 1)
        return ExactScalar(Fraction(num, den))
    m = _SURD_RE.match(text)
    if m:
        a = Fraction(m.group("a") or 0)
        b = Fraction(m.group("b") or 1)
        return ExactScalar(a, b, int(m.group("d")))
    raise ValueError(f"cannot parse scalar spec {text!r}")


def format_scalar_spec(x) -> str:
    x = as_scalar(x)
    if x.is_rational:
        q = x.as_fraction()
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    if x.a == 0 and x.b == 1:
        return f"sqrt:{x.d}"

    def frac(q: Fraction) -> str:
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

    return f"{frac(x.a)}+{frac(x.b)}*sqrt:{x.d}"


# -- JSON forms ----------------------------------------------------------


def scalar_to_json(x) -> dict:
    x = as_scalar(x)
    return {
        "a": [x.a.numerator, x.a.denominator],
        "b": [x.b.numerator, x.b.denominator],
        "d": x.d,
    }


def scalar_from_json(obj) -> ExactScalar:
    return ExactScalar(
        Fraction(obj["a"][0], obj["a"][1]),
        Fraction(obj["b"][0], obj["b"][1]),
        obj["d"],
    )


def natinf_to_json(x):
    return "inf" if x is INF else int(x)


def natinf_from_json(obj):
    if obj == "inf":
        return INF
    return int(obj)


# -- germs ---------------------------------------------------------------


class GermExponent:
    """Germ at 0 of ``eps -> base + slope_plus*eps`` (eps > 0) and
    ``base + slope_minus*eps`` (eps < 0).

    Minima of linear germs are concave at 0, so ``slope_plus <=
    slope_minus`` is an invariant.  The zero germ has base ``INF``;
    its slopes are canonicalized to 0.
    """

    __slots__ = ("base", "slope_plus", "slope_minus")

    def __init__(self, base, slope_plus=0, slope_minus=None):
        if slope_minus is None:
            slope_minus = slope_plus
        if base is INF:
            base, slope_plus, slope_minus = INF, as_scalar(0), as_scalar(0)
        else:
            base = as_scalar(base)
            slope_plus = as_scalar(slope_plus)
            slope_minus = as_scalar(slope_minus)
            if slope_plus > slope_minus:
                raise ValueError("germ slopes must satisfy slope_plus <= slope_minus")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "slope_plus", slope_plus)
        object.__setattr__(self, "slope_minus", slope_minus)

    def __setattr__(self, name, value):
        raise AttributeError("GermExponent is immutable")

    @property
    def is_zero(self) -> bool:
        return self.base is INF

    def __eq__(self, other):
        if not isinstance(other, GermExponent):
            return NotImplemented
        return (
            self.base == other.base
            and self.slope_plus == other.slope_plus
            and self.slope_minus == other.slope_minus
        )

    def __hash__(self):
        return hash((self.base, self.slope_plus, self.slope_minus))

    def __repr__(self):
        if self.is_zero:
            return "GermExponent(inf)"
        return f"GermExponent({self.base}, {self.slope_plus}, {self.slope_minus})"

    def to_json(self) -> dict:
        return {
            "base": "inf" if self.is_zero else scalar_to_json(self.base),
            "slope_plus": scalar_to_json(self.slope_plus),
            "slope_minus": scalar_to_json(self.slope_minus),
        }


ZERO_GERM = GermExponent(INF)
UNIT_GERM = GermExponent(0, 0, 0)


def germ_min(g: GermExponent, h: GermExponent, one_sided: bool = False) -> GermExponent:
    """Pointwise minimum of two germs.

    With ``one_sided=True`` only the eps > 0 side is meaningful and the
    minus slope of the result mirrors the plus slope.
    """
    if g.is_zero:
        return h
    if h.is_zero:
        return g
    if g.base < h.base:
        win = g
    elif h.base < g.base:
        win = h
    else:
        sp = min(g.slope_plus, h.slope_plus)
        if one_sided:
            return GermExponent(g.base, sp, sp)
        return GermExponent(g.base, sp, max(g.slope_minus, h.slope_minus))
    if one_sided:
        return GermExponent(win.base, win.slope_plus, win.slope_plus)
    return win


def germ_add(g: GermExponent, h: GermExponent) -> GermExponent:
    """Componentwise sum (product of the underlying tropical values)."""
    if g.is_zero or h.is_zero:
        return ZERO_GERM
    return GermExponent(
        g.base + h.base,
        g.slope_plus + h.slope_plus,
        g.slope_minus + h.slope_minus,
    )
