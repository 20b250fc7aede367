"""Dual numbers realized inside P(R*_{n,0,1}).

The ideal n-vectors E_1 ... E_n all contain e0, so every product E_i E_j
vanishes and x + sum d_i E_i multiplies exactly like an `ADNumber`.
"""

from __future__ import annotations

from typing import Any, Sequence

import numpy as np

from ..algebra.multivector import Multivector
from ..algebra.signature import Signature, SignatureError
from .forward import ADNumber


def _check_index(index: int, sig: Signature) -> None:
    if not sig.is_euclidean_pga:
        raise SignatureError(f"Ideal n-vectors need a euclidean PGA signature, not {sig}")
    if not 1 <= index <= sig.dimension:
        raise IndexError(f"E{index} does not exist in {sig}")


def lift_multivector(x: float, index: int, sig: Signature) -> Multivector:
    """x + E_index."""
    _check_index(index, sig)
    return Multivector.from_blades(sig, {"1": x, f"E{index}": 1.0})


def to_multivector(a: ADNumber, sig: Signature) -> Multivector:
    """val + sum grads[i] E_(i+1)."""
    for i in range(a.size):
        _check_index(i + 1, sig)
    terms = {"1": a.val} | {f"E{i + 1}": g for i, g in enumerate(a.grads)}
    return Multivector.from_blades(sig, terms)


def ad_from_multivector(mv: Multivector, size: int | None = None) -> ADNumber:
    """Read the value and the E_i weights back into an `ADNumber`."""
    n = mv.sig.dimension if size is None else size
    for i in range(1, n + 1):
        _check_index(i, mv.sig)
    return ADNumber(mv.scalar, np.array([mv[f"E{i}"] for i in range(1, n + 1)]))


def evaluate_polynomial(coeffs: Sequence[float], x: Any) -> Any:
    """Horner evaluation of sum coeffs[k] x^k for floats, AD numbers or multivectors."""
    result = 0.0 * x
    for c in reversed(coeffs):
        result = result * x + c
    return result


def evaluate_polynomial_in_algebra(
    coeffs: Sequence[float], x: float, sig: Signature, index: int = 1
) -> ADNumber:
    """p(x + E_index) computed with the geometric product, read back as an AD number."""
    value = evaluate_polynomial(coeffs, lift_multivector(x, index, sig))
    return ad_from_multivector(value)
