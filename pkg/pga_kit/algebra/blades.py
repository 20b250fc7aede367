"""Bitmask blades: grades, reordering signs, names.

Bit i of a blade set means generator e_i is a factor; factors are kept in
ascending index order.
"""

from __future__ import annotations

import re
from functools import lru_cache

from ..errors import PGAError
from .signature import Signature

# Digits used when printing generator indices; 10 and 11 fall back to letters.
_INDEX_DIGITS = "0123456789ab"

_E_BLADE = re.compile(r"^e([0-9ab]+)$")
_COMPLEMENT = re.compile(r"^E([0-9ab])$")


class UnknownBladeError(PGAError, ValueError):
    """Raised for blade tokens that do not exist in the active algebra."""

    pass


def grade(bits: int) -> int:
    """Grade of a blade: the number of generator factors."""
    return bits.bit_count()


def reorder_sign(a: int, b: int) -> int:
    """Sign of the permutation that sorts the concatenation of blades a and b."""
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_product(a: int, b: int, metric: tuple[float, ...]) -> tuple[float, int]:
    """Geometric product of two basis blades.

    Returns:
        (sign, bits) of the result; sign is 0 when a repeated generator is null.
    """
    sign = float(reorder_sign(a, b))
    common = a & b
    index = 0
    while common:
        if common & 1:
            sign *= metric[index]
        common >>= 1
        index += 1
    return sign, a ^ b


def blade_indices(bits: int) -> list[int]:
    """Generator indices of a blade in ascending order."""
    return [i for i in range(bits.bit_length()) if bits >> i & 1]


def blade_name(bits: int) -> str:
    """Canonical text name: `1` for the scalar blade, else `e` + ascending indices."""
    if bits == 0:
        return "1"
    return "e" + "".join(_INDEX_DIGITS[i] for i in blade_indices(bits))


@lru_cache(maxsize=64)
def complement_blade(index: int, sig: Signature) -> tuple[int, int]:
    """The n-vector E_i with e_i ^ E_i = I, as (sign, bits)."""
    full = sig.pseudoscalar_bits
    bits = full ^ (1 << index)
    # e_i ^ (s e_bits) = s * reorder_sign(e_i, bits) I must be +I
    return reorder_sign(1 << index, bits), bits


@lru_cache(maxsize=4096)
def parse_blade(token: str, sig: Signature) -> tuple[int, int]:
    """Resolve a blade token to (sign, bits) in the given algebra.

    Accepts `1`, `I`, `E<i>` and `e<indices>` with the indices in any order;
    out-of-order indices pick up the permutation sign (e31 = -e13).

    Raises:
        UnknownBladeError: For generators outside the signature, repeated
            generators or unrecognised tokens.
    """
    n = sig.n_generators
    if token == "1":
        return 1, 0
    if token == "I":
        return 1, sig.pseudoscalar_bits
    match = _COMPLEMENT.match(token)
    if match:
        index = _INDEX_DIGITS.index(match.group(1))
        if index >= n:
            raise UnknownBladeError(f"unknown generator in {token!r} for {sig.name}")
        return complement_blade(index, sig)
    match = _E_BLADE.match(token)
    if not match:
        raise UnknownBladeError(f"not a blade token: {token!r}")
    bits = 0
    sign = 1
    for ch in match.group(1):
        index = _INDEX_DIGITS.index(ch)
        if index >= n:
            raise UnknownBladeError(f"unknown generator e{ch} in {token!r} for {sig.name}")
        if bits >> index & 1:
            raise UnknownBladeError(f"repeated generator e{ch} in {token!r}")
        # appending e_index to the right of the factors gathered so far
        sign *= reorder_sign(bits, 1 << index)
        bits |= 1 << index
    return sign, bits


def is_blade_token(token: str) -> bool:
    """True if the identifier is spelled like a blade (validity aside)."""
    return token == "I" or bool(_E_BLADE.match(token) or _COMPLEMENT.match(token))
