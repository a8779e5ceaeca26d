"""Sign patterns of real-rooted polynomials and the orders of their root moduli.

A hyperbolic polynomial with nonzero coefficients and positive leading
coefficient determines two combinatorial shadows: the sign pattern of its
coefficients and the word recording, from the smallest root modulus up,
whether each root is negative or positive.  This package decides which
pattern/order pairs are realizable, produces exact rational witnesses,
and enumerates the small cases exhaustively.
"""

from __future__ import annotations

from .adjacency import (
    FREE,
    AmbiguousPattern,
    STReport,
    expand_S,
    filter_T,
    lift_poly,
    lift_sources,
    parse_ambiguous,
    symbolic_lift,
    verify_proposition,
)
from .census import (
    DEFAULT_CENSUS_CEILING,
    CensusRow,
    PatternVerdict,
    all_patterns,
    canonical_family_check,
    census,
    plus_block_family,
    verify_theorem_small,
)
from .errors import (
    BadNormalization,
    DegreeTooLarge,
    DegreeZero,
    EmptyInput,
    IllegalCharacter,
    IncompatibleCounts,
    InvalidRootSet,
    LeadingMinus,
    RatioCapExceeded,
    SignOrderError,
    ZeroCoefficient,
)
from .patterns import (
    MINUS,
    PLUS,
    ConfigHit,
    ModuliOrder,
    SignPattern,
    canonical_order,
    classify_rigid,
    find_configurations,
    is_canonical,
    isolated_features,
    negate_variable,
    parse_order,
    parse_pattern,
    sign_counts,
)
from .polynomials import (
    ExactPoly,
    RootSet,
    moduli_order_of_roots,
    pattern_of_poly,
    poly_from_roots,
)
from .realize import (
    GRID_RATIOS,
    RATIO_CAP,
    SearchReport,
    WitnessRequest,
    enumerate_orders,
    realizable_orders,
    realize_canonical,
    witness_search,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousPattern",
    "BadNormalization",
    "CensusRow",
    "ConfigHit",
    "DEFAULT_CENSUS_CEILING",
    "DegreeTooLarge",
    "DegreeZero",
    "EmptyInput",
    "ExactPoly",
    "FREE",
    "GRID_RATIOS",
    "IllegalCharacter",
    "IncompatibleCounts",
    "InvalidRootSet",
    "LeadingMinus",
    "MINUS",
    "ModuliOrder",
    "PLUS",
    "PatternVerdict",
    "RATIO_CAP",
    "RatioCapExceeded",
    "RootSet",
    "STReport",
    "SearchReport",
    "SignOrderError",
    "SignPattern",
    "WitnessRequest",
    "ZeroCoefficient",
    "all_patterns",
    "canonical_family_check",
    "canonical_order",
    "census",
    "classify_rigid",
    "enumerate_orders",
    "expand_S",
    "filter_T",
    "find_configurations",
    "is_canonical",
    "isolated_features",
    "lift_poly",
    "lift_sources",
    "moduli_order_of_roots",
    "negate_variable",
    "parse_ambiguous",
    "parse_order",
    "parse_pattern",
    "pattern_of_poly",
    "plus_block_family",
    "poly_from_roots",
    "realizable_orders",
    "realize_canonical",
    "sign_counts",
    "symbolic_lift",
    "verify_proposition",
    "verify_theorem_small",
    "witness_search",
]
