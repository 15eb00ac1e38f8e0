"""Composition of two sloped correspondences through their tensor product.

A simple tensor pairs an element of the slope-lam image with an element
of the slope-lam' image.  The middle factor acts on the left leg by
integer shifts and on the right leg by lam'-multiples, giving the
crossing relation

    (x + k) (x) y   ~   x (x) (y + k*lam'),   k a natural number.

The cancellative quotient of the tensor product is handled operationally:
``normal_form`` gives a canonical representative, ``germ_evaluate`` maps
the generated part into germs (the left leg picks up the tangential
deformation), and ``rewrite_equiv`` decides equality by a bounded
breadth-first search over crossing and re-witnessing moves.

The composition law itself is arithmetic on the slopes: the composite
slope is the product, and a tangential identity deformation appears
exactly when two irrational slopes have a rational product (the germ
slopes then separate value collisions that no rewrite chain can merge).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .correspondence import CorrespondenceElement, check_positive
from .errors import NotGenerated
from .scalars import ExactScalar, GermExponent, ZERO_GERM, format_scalar_spec


@dataclass(frozen=True)
class SimpleTensor:
    """left leg in the slope-lam image, right leg in the slope-lam' image."""

    left: CorrespondenceElement
    right: CorrespondenceElement

    @classmethod
    def from_witnesses(cls, lam, lamp, left_w, right_w) -> "SimpleTensor":
        return cls(
            CorrespondenceElement.from_witness(lam, *left_w),
            CorrespondenceElement.from_witness(lamp, *right_w),
        )

    @property
    def is_zero(self) -> bool:
        return self.left.is_zero or self.right.is_zero

    def to_json(self) -> dict:
        return {"left": self.left.to_json(), "right": self.right.to_json()}


def normal_form(t: SimpleTensor, lam, lamp) -> SimpleTensor:
    """Push the integer part of the left witness across the middle.

    Witnesses (a, b) (x) (c, d) normalize to (a, 0) (x) (b + c, d); each
    unit step is one crossing, so the class is unchanged.  Idempotent.
    """
    lam, lamp = check_positive(lam), check_positive(lamp)
    if t.is_zero:
        return t
    a, b = t.left.witness
    c, d = t.right.witness
    return SimpleTensor.from_witnesses(lam, lamp, (a, 0), (b + c, d))


def germ_evaluate(t: SimpleTensor, lam, lamp) -> GermExponent:
    """Evaluate a generated-part tensor into a germ.

    In normal form the witnesses must be (a, 0) (x) (0, d); the value is
    a*lam*lamp + d and the left leg contributes slope a*lam*lamp on both
    sides (the slope records how the value moves when the left slope is
    thickened to lam*(1 + eps)).
    """
    lam, lamp = check_positive(lam), check_positive(lamp)
    if t.is_zero:
        return ZERO_GERM
    nf = normal_form(t, lam, lamp)
    a, _ = nf.left.witness
    mid, d = nf.right.witness
    if mid:
        raise NotGenerated(
            f"normal form carries a middle multiple {mid}; not in the generated part"
        )
    s = a * (lam * lamp)
    return GermExponent(s + d, s, s)


@dataclass(frozen=True)
class RewriteVerdict:
    equivalent: bool
    inconclusive: bool  # search hit the bound without deciding

    def to_json(self) -> dict:
        return {"equivalent": self.equivalent, "inconclusive": self.inconclusive}


def _rational_parts(lam: ExactScalar):
    if lam.is_rational:
        f = lam.as_fraction()
        return f.numerator, f.denominator
    return None


def rewrite_equiv(
    t1: SimpleTensor, t2: SimpleTensor, lam, lamp, bound: int = 64
) -> RewriteVerdict:
    """Bounded search for a chain of relation moves from t1 to t2.

    Moves: unit crossings in both directions and, for rational slopes,
    value-preserving re-witnessing inside either leg.  All intermediate
    witness coordinates stay within [0, bound].  A positive answer is
    sound; a negative answer is definitive only when no move was pruned
    by the bound (otherwise ``inconclusive`` is set).
    """
    lam, lamp = check_positive(lam), check_positive(lamp)
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if t1.is_zero or t2.is_zero:
        return RewriteVerdict(t1.is_zero and t2.is_zero, False)
    if t1 == t2:
        return RewriteVerdict(True, False)

    start = (*t1.left.witness, *t1.right.witness)
    if max(start) > bound:
        return RewriteVerdict(False, True)

    lr, pr = _rational_parts(lam), _rational_parts(lamp)

    # integer-only target predicate
    if lr is None:
        ta, tb = t2.left.witness

        def hit_left(a, b):
            return a == ta and b == tb

    else:
        n1, m1 = lr
        tl = t2.left.alpha.as_fraction() * m1
        tl_num = tl.numerator if tl.denominator == 1 else None

        def hit_left(a, b):
            return tl_num is not None and a * n1 + b * m1 == tl_num

    if pr is None:
        tc, td = t2.right.witness

        def hit_right(c, d):
            return c == tc and d == td

    else:
        n2, m2 = pr
        tr = t2.right.alpha.as_fraction() * m2
        tr_num = tr.numerator if tr.denominator == 1 else None

        def hit_right(c, d):
            return tr_num is not None and c * n2 + d * m2 == tr_num

    moves = [(0, 1, -1, 0), (0, -1, 1, 0)]
    if lr is not None:
        n1, m1 = lr
        moves += [(m1, -n1, 0, 0), (-m1, n1, 0, 0)]
    if pr is not None:
        n2, m2 = pr
        moves += [(0, 0, m2, -n2), (0, 0, -m2, n2)]

    seen = {start}
    queue = deque([start])
    pruned = False
    while queue:
        a, b, c, d = queue.popleft()
        if hit_left(a, b) and hit_right(c, d):
            return RewriteVerdict(True, False)
        for da, db, dc, dd in moves:
            na, nb, nc, nd = a + da, b + db, c + dc, d + dd
            if na < 0 or nb < 0 or nc < 0 or nd < 0:
                continue
            if na > bound or nb > bound or nc > bound or nd > bound:
                pruned = True
                continue
            state = (na, nb, nc, nd)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    return RewriteVerdict(False, pruned)


def tensor_power(t: SimpleTensor, k: int, lam, lamp) -> SimpleTensor:
    """k-th multiplicative power of a simple tensor (witnesses scale)."""
    if k < 1:
        raise ValueError("power must be >= 1")
    if t.is_zero:
        return t
    a, b = t.left.witness
    c, d = t.right.witness
    return SimpleTensor.from_witnesses(lam, lamp, (k * a, k * b), (k * c, k * d))


@dataclass(frozen=True)
class ReducedVerdict:
    equivalent: bool
    inconclusive: bool
    power: int | None = None  # certifying power when equivalent

    def to_json(self) -> dict:
        return {
            "equivalent": self.equivalent,
            "inconclusive": self.inconclusive,
            "power": self.power,
        }


def reduced_equiv(
    t1: SimpleTensor, t2: SimpleTensor, lam, lamp, bound: int = 64, max_power: int | None = None
) -> ReducedVerdict:
    """Equality of simple tensors after cancellative reduction.

    A chain between the k-th powers certifies reduced equality: if
    t1^k = t2^k then multiplying both tensors by (t1 + t2)^(k-1) gives
    the same element, so the reduction map identifies t1 and t2.  For
    rational slopes n1/m1, n2/m2 a certifying power never needs to
    exceed m1*m2 (the chain moves the left coefficient in steps of m1
    and transfers middle multiples in steps of m2); irrational legs gain
    nothing from powers because no move changes the irrational
    coefficient, so the default cap is 1 there.
    """
    lam, lamp = check_positive(lam), check_positive(lamp)
    if max_power is None:
        lr, pr = _rational_parts(lam), _rational_parts(lamp)
        max_power = lr[1] * pr[1] if lr and pr else 1
    inconclusive = False
    for k in range(1, max_power + 1):
        verdict = rewrite_equiv(
            tensor_power(t1, k, lam, lamp), tensor_power(t2, k, lam, lamp), lam, lamp, bound
        )
        if verdict.equivalent:
            return ReducedVerdict(True, False, k)
        inconclusive |= verdict.inconclusive
    return ReducedVerdict(False, inconclusive, None)


CASE_RATIONAL = "rational-rational"
CASE_IRRATIONAL_PRODUCT = "product-irrational"
CASE_DEFORMED = "irrational-pair-rational-product"


@dataclass(frozen=True)
class ComposedResult:
    rho: ExactScalar  # composite slope lam * lamp
    deformed: bool  # tangential identity factor present
    case: str
    witnesses: tuple  # generated-part points (a, d) exhibiting the case

    def to_json(self) -> dict:
        return {
            "rho": format_scalar_spec(self.rho),
            "deformed": self.deformed,
            "case": self.case,
            "witnesses": [list(w) for w in self.witnesses],
        }


def compose(lam, lamp) -> ComposedResult:
    """Slope-product composition with deformation detection.

    Three cases: both slopes rational, or an irrational product, compose
    to the plain product slope; two irrationals with rational product
    pick up the tangential identity deformation, witnessed by a pair of
    generated points with equal value but different germ slopes.
    """
    lam, lamp = check_positive(lam), check_positive(lamp)
    rho = lam * lamp  # may raise IncompatibleRadicals
    if lam.is_rational and lamp.is_rational:
        case, deformed = CASE_RATIONAL, False
    elif not rho.is_rational:
        case, deformed = CASE_IRRATIONAL_PRODUCT, False
    else:
        # a rational product of a rational and an irrational is impossible
        assert not lam.is_rational and not lamp.is_rational
        case, deformed = CASE_DEFORMED, True
    if rho.is_rational:
        f: Fraction = rho.as_fraction()
        witnesses = ((f.denominator, 0), (0, f.numerator))
    else:
        witnesses = ()
    return ComposedResult(rho, deformed, case, witnesses)


def witness_tensor(lam, lamp, point) -> SimpleTensor:
    """Generated-part tensor for a point (a, d): (a, 0) (x) (0, d)."""
    a, d = point
    return SimpleTensor.from_witnesses(lam, lamp, (a, 0), (0, d))


def verify_composition(
    result: ComposedResult, lam, lamp, bound: int = 64, probe: int = 20
) -> dict:
    """Structural cross-check of a composition result.

    Rational-product cases must either identify the witness collision
    after reduction (undeformed) or separate it definitively at every
    power with distinct germ slopes (deformed).  Irrational products
    must evaluate injectively on the probe grid.  Any disagreement turns
    ``ok`` off; callers treat that as a hard failure.
    """
    lam, lamp = check_positive(lam), check_positive(lamp)
    checks: dict = {"case": result.case}
    ok = True
    if result.witnesses:
        w1, w2 = result.witnesses
        t1, t2 = witness_tensor(lam, lamp, w1), witness_tensor(lam, lamp, w2)
        g1, g2 = germ_evaluate(t1, lam, lamp), germ_evaluate(t2, lam, lamp)
        verdict = reduced_equiv(t1, t2, lam, lamp, bound)
        checks["witness_bases_equal"] = g1.base == g2.base
        checks["witness_slopes"] = [
            format_scalar_spec(g1.slope_plus),
            format_scalar_spec(g2.slope_plus),
        ]
        checks["rewrite"] = verdict.to_json()
        ok &= g1.base == g2.base
        if result.deformed:
            ok &= (not verdict.equivalent) and not verdict.inconclusive
            ok &= g1.slope_plus != g2.slope_plus
        else:
            ok &= verdict.equivalent
    else:
        values = {
            (a * result.rho + d) for a in range(probe + 1) for d in range(probe + 1)
        }
        injective = len(values) == (probe + 1) ** 2
        checks["base_injective"] = injective
        ok &= injective
    checks["ok"] = bool(ok)
    return checks
