"""Shared text form for numbers and multivectors.

`c0 + c1*e0 + ... + cK*e0123`: zero terms omitted, blades in ascending
bitmask order, a scalar-only value printed as a plain number.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .blades import blade_name, grade

if TYPE_CHECKING:
    from .multivector import Multivector

DEFAULT_DIGITS = 10


def format_number(value: float, digits: int = DEFAULT_DIGITS) -> str:
    """Format a real with `digits` significant digits, folding -0 into 0."""
    text = f"{value:.{digits}g}"
    if text in ("-0", "-0.0"):
        return "0"
    return text


def blade_order(size: int) -> list[int]:
    """Blades sorted by grade, then by bitmask."""
    return sorted(range(size), key=lambda bits: (grade(bits), bits))


def to_text(mv: Multivector, digits: int = DEFAULT_DIGITS, zero_tol: float = 0.0) -> str:
    """Render a multivector in the shared text form.

    Args:
        mv: Value to render.
        digits: Significant digits per coefficient.
        zero_tol: Coefficients with magnitude at or below this are omitted.
    """
    terms: list[tuple[float, int]] = []
    for bits in blade_order(mv.sig.size):
        value = float(mv.coeffs[bits])
        if abs(value) > zero_tol and format_number(value, digits) != "0":
            terms.append((value, bits))
    if not terms:
        return "0"

    parts: list[str] = []
    for index, (value, bits) in enumerate(terms):
        magnitude = format_number(abs(value), digits)
        body = magnitude if bits == 0 else f"{magnitude}*{blade_name(bits)}"
        if index == 0:
            parts.append(f"-{body}" if value < 0 else body)
        else:
            parts.append(f" - {body}" if value < 0 else f" + {body}")
    return "".join(parts)
