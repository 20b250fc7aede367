"""Dual numbers s + pI with I^2 = 0.

They carry the norm of a 3D bivector (scalar plus pseudoscalar part) and the
inverse square root used to normalize motors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real
from typing import Union

from ..algebra.multivector import Multivector
from ..algebra.signature import Signature
from ..errors import NotInvertibleError

DualLike = Union["DualNumber", int, float]


@dataclass(frozen=True)
class DualNumber:
    """s + pI, multiplied modulo I^2 = 0."""

    s: float
    p: float = 0.0

    @classmethod
    def of(cls, x: Multivector) -> DualNumber:
        """Scalar and pseudoscalar parts of a multivector."""
        return cls(x.scalar, x.pseudoscalar)

    @staticmethod
    def _coerce(other: DualLike) -> DualNumber:
        if isinstance(other, DualNumber):
            return other
        if isinstance(other, Real):
            return DualNumber(float(other), 0.0)
        return NotImplemented

    def to_multivector(self, sig: Signature) -> Multivector:
        return Multivector.scalar_of(sig, self.s) + Multivector.blade(sig, "I", self.p)

    def __add__(self, other: DualLike) -> DualNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return DualNumber(self.s + o.s, self.p + o.p)

    __radd__ = __add__

    def __sub__(self, other: DualLike) -> DualNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return DualNumber(self.s - o.s, self.p - o.p)

    def __rsub__(self, other: DualLike) -> DualNumber:
        return (-self) + other

    def __neg__(self) -> DualNumber:
        return DualNumber(-self.s, -self.p)

    def __mul__(self, other: DualLike) -> DualNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return DualNumber(self.s * o.s, self.s * o.p + self.p * o.s)

    __rmul__ = __mul__

    def __truediv__(self, other: DualLike) -> DualNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: DualLike) -> DualNumber:
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> DualNumber:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        # (s + pI)^k = s^k + k s^(k-1) p I
        if exponent == 0:
            return DualNumber(1.0, 0.0)
        return DualNumber(self.s**exponent, exponent * self.s ** (exponent - 1) * self.p)

    def inverse(self) -> DualNumber:
        """1/(u + vI) = 1/u - (v/u^2) I.

        Raises:
            NotInvertibleError: If the scalar part is zero.
        """
        if self.s == 0.0:
            raise NotInvertibleError(f"{self} is not invertible as a dual number")
        return DualNumber(1.0 / self.s, -self.p / (self.s * self.s))

    def sqrt(self) -> DualNumber:
        """sqrt(s + pI) = sqrt(s) + p/(2 sqrt(s)) I.

        Raises:
            NotInvertibleError: If the scalar part is not positive.
        """
        if self.s <= 0.0:
            raise NotInvertibleError(f"{self} has no square root as a dual number")
        root = math.sqrt(self.s)
        return DualNumber(root, self.p / (2.0 * root))

    def isclose(self, other: DualLike, atol: float = 1e-12) -> bool:
        o = self._coerce(other)
        return abs(self.s - o.s) <= atol and abs(self.p - o.p) <= atol

    def __str__(self) -> str:
        sign = "-" if self.p < 0 else "+"
        return f"{self.s:g} {sign} {abs(self.p):g}I"


def dual_scale(d: DualNumber, x: Multivector) -> Multivector:
    """(s + pI) X = sX + p(IX)."""
    return x * d.s + Multivector.blade(x.sig, "I", d.p) * x
