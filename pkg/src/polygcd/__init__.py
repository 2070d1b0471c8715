"""Exact resultants of monic integer polynomials and the complete
divisor-to-residue map of gcd(f(n), g(n)) for square-free resultants.

Coefficient order is leading-first everywhere: ``(1, 0, 3)`` is ``x^2 + 3``.
"""
from .analysis import (
    RESIDUE_LISTING_CAP,
    AnalysisOutcome,
    AtlasEntry,
    GcdAtlas,
    NotSquarefree,
    ZeroResultant,
    analyze,
    build_atlas,
    coprime_witness,
    minimal_period,
)
from .errors import (
    CapExceeded,
    CriterionInapplicable,
    FactorizationFailed,
    InputError,
    InvariantBreach,
    ParseError,
    PolyGcdError,
)
from .linalg import IntMatrix, det_bareiss, resultant, resultant_prs, sylvester_matrix
from .modp import (
    PrimeFieldPoly,
    common_root_mod_p,
    poly_ext_gcd_mod_p,
    poly_gcd_mod_p,
    rank_mod_p,
)
from .ntheory import (
    DIVISOR_CAP,
    MR_DETERMINISTIC_BOUND,
    Factorization,
    crt,
    divisors,
    ext_gcd,
    factor,
    int_gcd,
    is_prime,
    is_squarefree,
)
from .oracle import (
    BRUTE_FORCE_CAP,
    BruteForceProfile,
    brute_force_profile,
    check_divides,
    check_periodicity,
)
from .poly import IntPoly, MonicIntPoly, gcd_over_Z, parse_poly, reduce_mod
from .snf import SnfResult, invariant_factors, smith_normal_form

__version__ = "0.1.0"

__all__ = [
    "AnalysisOutcome",
    "AtlasEntry",
    "BRUTE_FORCE_CAP",
    "BruteForceProfile",
    "CapExceeded",
    "CriterionInapplicable",
    "DIVISOR_CAP",
    "Factorization",
    "FactorizationFailed",
    "GcdAtlas",
    "InputError",
    "IntMatrix",
    "IntPoly",
    "InvariantBreach",
    "MonicIntPoly",
    "MR_DETERMINISTIC_BOUND",
    "NotSquarefree",
    "ParseError",
    "PolyGcdError",
    "PrimeFieldPoly",
    "RESIDUE_LISTING_CAP",
    "SnfResult",
    "ZeroResultant",
    "analyze",
    "build_atlas",
    "brute_force_profile",
    "check_divides",
    "check_periodicity",
    "common_root_mod_p",
    "coprime_witness",
    "crt",
    "det_bareiss",
    "divisors",
    "ext_gcd",
    "factor",
    "gcd_over_Z",
    "int_gcd",
    "invariant_factors",
    "is_prime",
    "is_squarefree",
    "minimal_period",
    "parse_poly",
    "poly_ext_gcd_mod_p",
    "poly_gcd_mod_p",
    "rank_mod_p",
    "reduce_mod",
    "resultant",
    "resultant_prs",
    "smith_normal_form",
    "sylvester_matrix",
]
