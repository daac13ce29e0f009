"""Exact computation of Hadamard products and powers of projective varieties.

Coefficients live in cyclotomic fields, polynomials are sparse, ideals are
handled by a Buchberger engine, and binomial hypersurfaces get closed-form
products, powers and idempotency exponents.  A floating-point sampler
cross-checks closed forms independently of the exact code.
"""

from .exactnum import (
    ONE,
    ZERO,
    CyclotomicNumber,
    Rational,
    RootOfUnityWitness,
    complex_embedding,
    cyclotomic_polynomial,
    multiplicative_order,
    root_of_unity,
    root_of_unity_witness,
)
from .multipoly import (
    GREVLEX,
    GRLEX,
    LEX,
    MonomialOrder,
    MultiPoly,
    RingError,
    evaluate,
    is_homogeneous,
    leading_term,
    make_order,
    monomial_gcd_coprime,
)
from .parsing import ParseError, format_number, format_point, format_poly, parse_number, parse_point, parse_poly
from .groebner import (
    ContractError,
    IdealPresentation,
    OracleScaleError,
    buchberger,
    eliminate,
    elimination_order,
    ideal,
    ideal_equal,
    is_groebner_basis,
    normal_form,
    star_varieties_elim,
)
from .core import (
    DeltaStratumError,
    ProjectivePoint,
    TransformDomainError,
    delta_level,
    hadamard_transform,
    invert_point,
    quotient_point,
    star_point,
    transform_ideal,
)
from .binomial import (
    BinomialForm,
    BinomialType,
    BinomialVariety,
    CoordinateHyperplane,
    CoordinateSubspace,
    HypersurfaceUnion,
    NonHypersurfaceError,
    UnionPowerResult,
    VarietyExponent,
    binomial_power,
    binomial_product,
    classify_binomial,
    coordinate_product,
    cyclic_label,
    detect_type,
    is_idempotent,
    is_pure_difference_ideal,
    min_idempotent_exponent,
    multiplication_table,
    union_power,
    variety_min_exponent,
)
from .numeric import (
    NumericPoint,
    ResidualReport,
    SamplingError,
    sample_on_binomial,
    verify_power_claim,
    verify_product_claim,
)

__version__ = "0.1.0"

__all__ = [
    "BinomialForm",
    "BinomialType",
    "BinomialVariety",
    "ContractError",
    "CoordinateHyperplane",
    "CoordinateSubspace",
    "CyclotomicNumber",
    "DeltaStratumError",
    "GREVLEX",
    "GRLEX",
    "HypersurfaceUnion",
    "IdealPresentation",
    "LEX",
    "MonomialOrder",
    "MultiPoly",
    "NonHypersurfaceError",
    "NumericPoint",
    "ONE",
    "OracleScaleError",
    "ParseError",
    "ProjectivePoint",
    "Rational",
    "ResidualReport",
    "RingError",
    "RootOfUnityWitness",
    "SamplingError",
    "TransformDomainError",
    "UnionPowerResult",
    "VarietyExponent",
    "ZERO",
    "binomial_power",
    "binomial_product",
    "buchberger",
    "classify_binomial",
    "complex_embedding",
    "coordinate_product",
    "cyclic_label",
    "cyclotomic_polynomial",
    "delta_level",
    "detect_type",
    "eliminate",
    "elimination_order",
    "evaluate",
    "format_number",
    "format_point",
    "format_poly",
    "hadamard_transform",
    "ideal",
    "ideal_equal",
    "invert_point",
    "is_groebner_basis",
    "is_homogeneous",
    "is_idempotent",
    "is_pure_difference_ideal",
    "leading_term",
    "make_order",
    "min_idempotent_exponent",
    "monomial_gcd_coprime",
    "multiplication_table",
    "multiplicative_order",
    "normal_form",
    "parse_number",
    "parse_point",
    "parse_poly",
    "quotient_point",
    "root_of_unity",
    "root_of_unity_witness",
    "sample_on_binomial",
    "star_point",
    "star_varieties_elim",
    "transform_ideal",
    "union_power",
    "variety_min_exponent",
    "verify_power_claim",
    "verify_product_claim",
]
