"""Forward-mode automatic differentiation."""

from .forward import (
    ADDomainError,
    ADNumber,
    ad_atan2,
    ad_cos,
    ad_exp,
    ad_log,
    ad_pow,
    ad_sin,
    ad_sqrt,
    ad_tan,
    constant,
    derivative,
    gradient,
    lift,
)
from .multivector_ad import (
    ad_from_multivector,
    evaluate_polynomial,
    evaluate_polynomial_in_algebra,
    lift_multivector,
    to_multivector,
)

__all__ = [
    "ADDomainError",
    "ADNumber",
    "ad_atan2",
    "ad_cos",
    "ad_exp",
    "ad_from_multivector",
    "ad_log",
    "ad_pow",
    "ad_sin",
    "ad_sqrt",
    "ad_tan",
    "constant",
    "derivative",
    "evaluate_polynomial",
    "evaluate_polynomial_in_algebra",
    "gradient",
    "lift",
    "lift_multivector",
    "to_multivector",
]
