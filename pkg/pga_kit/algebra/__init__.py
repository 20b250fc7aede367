"""Signatures, blades, multivectors and every product of the algebra."""

from .blades import UnknownBladeError, blade_name, grade, parse_blade
from .cayley import (
    CayleyTable,
    CellMismatch,
    cayley_table,
    compare_with_golden,
    load_golden,
    verify_golden,
)
from .multivector import (
    Algebra,
    Multivector,
    commutator,
    geometric_product,
    grade_involution,
    grade_part,
    inner,
    inverse,
    join,
    join_all,
    meet_all,
    poincare_dual,
    poincare_undual,
    polarity,
    reverse,
    wedge,
)
from .signature import Signature, SignatureError, SignatureMismatchError
from .text import format_number, to_text

__all__ = [
    "Algebra",
    "CayleyTable",
    "CellMismatch",
    "Multivector",
    "Signature",
    "SignatureError",
    "SignatureMismatchError",
    "UnknownBladeError",
    "blade_name",
    "cayley_table",
    "commutator",
    "compare_with_golden",
    "format_number",
    "geometric_product",
    "grade",
    "grade_involution",
    "grade_part",
    "inner",
    "inverse",
    "join",
    "join_all",
    "load_golden",
    "meet_all",
    "parse_blade",
    "poincare_dual",
    "poincare_undual",
    "polarity",
    "reverse",
    "to_text",
    "verify_golden",
    "wedge",
]
