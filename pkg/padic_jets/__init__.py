"""
padic-jets: p-adic arithmetic, arithmetic jets and Coleman slope analysis.

Exact arithmetic in unramified extensions of ℤ_p, length-2 Witt vectors and
first p-jets, Newton polygons of p-adic series, Frobenius and Verschiebung
on the de Rham cohomology of odd-degree hyperelliptic curves, Coleman
sequences with the unramified-point test, and the explicit counting bounds
built on top of them. Every derived object is checked against an
independent brute-force oracle in the test suite.

Usage:
    from fractions import Fraction
    from padic_jets import HyperellipticCurve, ColemanEngine, CurvePointBar

    curve = HyperellipticCurve(5, [1, 1, 0, 0, 0, 1])
    fs = curve.frobenius()
    engine = ColemanEngine(curve)
    zbar = CurvePointBar.infinity()
    engine.unramified_test(zbar, Fraction(2, 9)).label
"""

__version__ = "0.1.0"

# Errors
from padic_jets.errors import HypothesisViolated, InputError, PadicJetsError, PrecisionError

# p-adic arithmetic
from padic_jets.padic import (
    AtPrecisionZero,
    ContextMismatch,
    DivisionNotExact,
    NonPrime,
    NonUnit,
    NotIrreducible,
    PadicContext,
    PadicNumber,
    frobenius_auto,
    teichmuller,
    valuation,
)

# Witt vectors and jets
from padic_jets.witt import (
    InsufficientPrecision,
    IntPolynomial,
    JetPoint,
    NotOnVariety,
    WittPair,
    cp_polynomial,
    delta_std,
    frobenius_lift,
    ghost,
    nabla,
    prolong,
    witt_add,
    witt_mul,
    witt_of,
)

# Series and Newton polygons
from padic_jets.series import (
    EXACT_ZERO,
    AllCoefficientsIndistinguishableFromZero,
    ExactValuation,
    IsASlope,
    NewtonPolygon,
    PadicSeries,
    UncertifiedRegion,
    negative_slopes,
    newton_polygon,
    polygon_tsv,
    value_valuation,
)

# Curves and cohomology
from padic_jets.derham import (
    AtPrecisionZeroError,
    BadReduction,
    CohomologyClass,
    DifferentialModP,
    FrobeniusStructure,
    HyperellipticCurve,
    LatticeMismatch,
    NotInHolomorphicPlusP,
    PrecisionExhausted,
    apply_frobenius,
    cartier_matrix,
    class_valuation,
    frobenius_matrix,
    is_ordinary,
    reduce_bar,
    verschiebung_apply,
    zeta_numerator_bruteforce,
)
from padic_jets.points import (
    CurvePointBar,
    UnsupportedDisc,
    count_points,
    lift_point,
    ord_at_point,
    rational_points,
)

# Coleman sequences
from padic_jets.coleman import (
    ColemanEngine,
    ColemanSequence,
    DiscExpansion,
    NSequence,
    RangeNotCertified,
    Verdict,
    candidate_slopes,
    disc_expansion,
    integral_valuation,
    k_sequence,
    n_sequence,
    slope_form,
    unramified_test,
)

# Bounds
from padic_jets.bounds import (
    BoundReport,
    DegenerateRankLocus,
    FinAbGroup,
    NotIndependent,
    StollReport,
    buium_mm_bound,
    chabauty_disc_assembly,
    coleman_chabauty_bound,
    determinantal_condition,
    gamma_mod_p_bound,
    gamma_quotient_exact,
    mordell_lang_point_bound,
    mordell_lang_reduction_bound,
    stoll_vanishing_sum,
)

# Stored curves
from padic_jets.catalog import STORED_CURVES, get_curve

__all__ = [
    "__version__",
    # errors
    "PadicJetsError", "InputError", "HypothesisViolated", "PrecisionError",
    # padic
    "PadicContext", "PadicNumber", "AtPrecisionZero", "valuation", "teichmuller",
    "frobenius_auto", "NonPrime", "NotIrreducible", "ContextMismatch", "NonUnit",
    "DivisionNotExact",
    # witt
    "IntPolynomial", "WittPair", "JetPoint", "cp_polynomial", "witt_add", "witt_mul",
    "ghost", "delta_std", "frobenius_lift", "witt_of", "prolong", "nabla",
    "InsufficientPrecision", "NotOnVariety",
    # series
    "PadicSeries", "NewtonPolygon", "ExactValuation", "IsASlope", "EXACT_ZERO",
    "newton_polygon", "negative_slopes", "value_valuation", "polygon_tsv",
    "AllCoefficientsIndistinguishableFromZero", "UncertifiedRegion",
    # derham
    "HyperellipticCurve", "CohomologyClass", "DifferentialModP", "FrobeniusStructure",
    "frobenius_matrix", "apply_frobenius", "verschiebung_apply", "class_valuation",
    "reduce_bar", "cartier_matrix", "is_ordinary", "zeta_numerator_bruteforce",
    "BadReduction", "LatticeMismatch", "NotInHolomorphicPlusP", "PrecisionExhausted",
    "AtPrecisionZeroError",
    # points
    "CurvePointBar", "rational_points", "count_points", "ord_at_point", "lift_point",
    "UnsupportedDisc",
    # coleman
    "ColemanEngine", "NSequence", "ColemanSequence", "DiscExpansion", "Verdict",
    "n_sequence", "k_sequence", "candidate_slopes", "integral_valuation", "slope_form",
    "unramified_test", "disc_expansion", "RangeNotCertified",
    # bounds
    "BoundReport", "FinAbGroup", "StollReport", "buium_mm_bound",
    "mordell_lang_reduction_bound", "mordell_lang_point_bound", "coleman_chabauty_bound",
    "gamma_mod_p_bound", "gamma_quotient_exact", "chabauty_disc_assembly",
    "stoll_vanishing_sum", "determinantal_condition", "NotIndependent", "DegenerateRankLocus",
    # catalog
    "STORED_CURVES", "get_curve",
]
