"""Exact min-plus algebra on the lattice square.

Building blocks: an exact scalar tower (rationals, quadratic surds,
infinity, germs), up-sets of N x N stored as minimal antichains, their
Newton-polygon hulls, sloped evaluations with witnesses, two-generator
numerical semigroups, and a composition engine for sloped
correspondences with germ-level deformation detection.  A randomized
axiom harness validates every carrier as a commutative semiring with
idempotent addition.
"""

from .compose import (
    ComposedResult,
    ReducedVerdict,
    RewriteVerdict,
    SimpleTensor,
    compose,
    germ_evaluate,
    normal_form,
    reduced_equiv,
    rewrite_equiv,
    tensor_power,
    verify_composition,
    witness_tensor,
)
from .correspondence import (
    ApproxStep,
    CorrespondenceElement,
    approximate,
    convergents,
    deformation_left,
    deformation_right,
    evaluate,
    germ_semiring,
    is_germ_element,
    iso_equivalent,
    iso_invariant,
    lambda_from_json,
    lambda_to_json,
    left_action,
    right_action,
    value_semiring,
)
from .errors import (
    DomainError,
    IncompatibleRadicals,
    NonPositiveLambda,
    NotGenerated,
    RationalLambda,
    WindowTooSmall,
    ZeroImage,
    ZeroScale,
)
from .figure import ALL_LAYERS, FigureSpec, emit_figure
from .hereditary import HereditarySet, UNIT_SET, ZERO_SET, hereditary_semiring, minimal_points
from .instances import STANDARD_SLOPES, standard_instances
from .polygon import (
    NewtonPolygon,
    UNIT_POLYGON,
    ZERO_POLYGON,
    cancels,
    convex_closure,
    polygon_semiring,
)
from .scalars import (
    INF,
    ExactScalar,
    GermExponent,
    UNIT_GERM,
    ZERO_GERM,
    as_scalar,
    format_scalar_spec,
    germ_add,
    germ_min,
    parse_scalar_spec,
    scalar_from_json,
    scalar_to_json,
    surd,
)
from .semigroup import conductor, gaps, represents
from .semiring import (
    BOOLEAN,
    INT_MIN_PLUS,
    NAT_MIN_PLUS,
    RATIONAL_MIN_PLUS,
    Semiring,
    SuiteReport,
    axiom_suite,
    is_subunit,
    tropical_pow,
)

__version__ = "0.1.0"
