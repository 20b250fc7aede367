"""Norms, motors and the plane and space formula catalogs."""

from .catalog import CATALOGS, FormulaSpec, UnknownFormulaError, call_formula, get_formula
from .dual import DualNumber, dual_scale
from .motors import (
    AxisDecomposition,
    AxisUndeterminedError,
    HalfTurnAmbiguityError,
    IdealBivectorError,
    LineProduct,
    Motor,
    NotAVersorError,
    PGAInternalError,
    ScrewParameters,
    axis_decompose,
    exp_bivector,
    line_product_decompose,
    log_motor,
    log_motor_closed_form,
    motor_between,
    reflection_group,
    sandwich,
    screw_parameters,
    sqrt_motor,
)
from .norms import (
    EuclideanElementError,
    IdealElementError,
    Norm,
    euclidean_norm,
    ideal_norm,
    is_ideal,
    norm,
    normalize,
    normalize_motor,
)
from .primitives import (
    ideal_point2,
    ideal_point3,
    line2,
    line3,
    plane3,
    point2,
    point3,
    point_coords,
    translation2,
    translation3,
)

__all__ = [
    "CATALOGS",
    "AxisDecomposition",
    "AxisUndeterminedError",
    "DualNumber",
    "EuclideanElementError",
    "FormulaSpec",
    "HalfTurnAmbiguityError",
    "IdealBivectorError",
    "IdealElementError",
    "LineProduct",
    "Motor",
    "Norm",
    "NotAVersorError",
    "PGAInternalError",
    "ScrewParameters",
    "UnknownFormulaError",
    "axis_decompose",
    "call_formula",
    "dual_scale",
    "euclidean_norm",
    "exp_bivector",
    "get_formula",
    "ideal_norm",
    "ideal_point2",
    "ideal_point3",
    "is_ideal",
    "line2",
    "line3",
    "line_product_decompose",
    "log_motor",
    "log_motor_closed_form",
    "motor_between",
    "norm",
    "normalize",
    "normalize_motor",
    "plane3",
    "point2",
    "point3",
    "point_coords",
    "reflection_group",
    "sandwich",
    "screw_parameters",
    "sqrt_motor",
    "translation2",
    "translation3",
]
