"""Forward-mode differentiation with multivariate dual numbers.

An `ADNumber` is val + sum grads[i] eps_i with eps_i eps_j = 0 for all i, j,
so every product keeps only first-order terms and grads carries the
partial derivatives. Second derivatives are not representable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real
from typing import Callable, Sequence, Union

import numpy as np

from ..errors import NotInvertibleError, PGAError


class ADDomainError(PGAError, ValueError):
    """Raised when a function is evaluated outside its real domain."""

    pass


@dataclass(frozen=True, eq=False)
class ADNumber:
    """A value together with its gradient over `len(grads)` variables."""

    val: float
    grads: np.ndarray

    def __post_init__(self) -> None:
        grads = np.array(self.grads, dtype=float).reshape(-1)
        grads.setflags(write=False)
        object.__setattr__(self, "val", float(self.val))
        object.__setattr__(self, "grads", grads)

    @property
    def size(self) -> int:
        return int(self.grads.shape[0])

    def _coerce(self, other: ADLike) -> ADNumber:
        if isinstance(other, ADNumber):
            if other.size != self.size:
                raise ValueError(f"Gradient sizes differ: {self.size} and {other.size}")
            return other
        if isinstance(other, Real):
            return constant(float(other), self.size)
        return NotImplemented

    def _chain(self, value: float, slope: float) -> ADNumber:
        """f(self) given f(val) and f'(val)."""
        return ADNumber(value, self.grads * slope)

    def __add__(self, other: ADLike) -> ADNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ADNumber(self.val + o.val, self.grads + o.grads)

    __radd__ = __add__

    def __sub__(self, other: ADLike) -> ADNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ADNumber(self.val - o.val, self.grads - o.grads)

    def __rsub__(self, other: ADLike) -> ADNumber:
        return (-self) + other

    def __neg__(self) -> ADNumber:
        return ADNumber(-self.val, -self.grads)

    def __pos__(self) -> ADNumber:
        return self

    def __mul__(self, other: ADLike) -> ADNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ADNumber(self.val * o.val, self.val * o.grads + o.val * self.grads)

    __rmul__ = __mul__

    def inverse(self) -> ADNumber:
        """1 / self.

        Raises:
            NotInvertibleError: If val is 0 (a pure infinitesimal).
        """
        if self.val == 0.0:
            raise NotInvertibleError("AD number with zero value has no inverse")
        return self._chain(1.0 / self.val, -1.0 / self.val**2)

    def __truediv__(self, other: ADLike) -> ADNumber:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: ADLike) -> ADNumber:
        return self.inverse() * other

    def __pow__(self, exponent: ADLike) -> ADNumber:
        return ad_pow(self, exponent)

    def __rpow__(self, base: float) -> ADNumber:
        return ad_pow(constant(base, self.size), self)

    def derivative(self, index: int = 0) -> float:
        return float(self.grads[index])

    def isclose(self, other: ADLike, atol: float = 1e-12) -> bool:
        o = self._coerce(other)
        return abs(self.val - o.val) <= atol and bool(np.allclose(self.grads, o.grads, atol=atol))

    def __repr__(self) -> str:
        return f"ADNumber(val={self.val!r}, grads={self.grads.tolist()!r})"

    def __str__(self) -> str:
        terms = [f"{self.val:g}"]
        terms += [f"{g:+g}*eps{i + 1}" for i, g in enumerate(self.grads) if g != 0.0]
        return " ".join(terms)


ADLike = Union[ADNumber, float, int]


def constant(x: float, size: int = 1) -> ADNumber:
    return ADNumber(x, np.zeros(size))


def lift(x: float, index: int = 0, size: int = 1) -> ADNumber:
    """x + eps_index, the seed for differentiating along variable `index`."""
    if not 0 <= index < size:
        raise IndexError(f"Variable index {index} out of range for {size} variables")
    grads = np.zeros(size)
    grads[index] = 1.0
    return ADNumber(x, grads)


def _as_ad(x: ADLike, size: int = 1) -> ADNumber:
    return x if isinstance(x, ADNumber) else constant(float(x), size)


def ad_exp(x: ADLike) -> ADNumber:
    a = _as_ad(x)
    value = math.exp(a.val)
    return a._chain(value, value)


def ad_log(x: ADLike) -> ADNumber:
    a = _as_ad(x)
    if a.val <= 0.0:
        raise ADDomainError(f"log is undefined at {a.val}")
    return a._chain(math.log(a.val), 1.0 / a.val)


def ad_sin(x: ADLike) -> ADNumber:
    a = _as_ad(x)
    return a._chain(math.sin(a.val), math.cos(a.val))


def ad_cos(x: ADLike) -> ADNumber:
    a = _as_ad(x)
    return a._chain(math.cos(a.val), -math.sin(a.val))


def ad_tan(x: ADLike) -> ADNumber:
    a = _as_ad(x)
    value = math.tan(a.val)
    return a._chain(value, 1.0 + value * value)


def ad_sqrt(x: ADLike) -> ADNumber:
    a = _as_ad(x)
    if a.val <= 0.0:
        raise ADDomainError(f"sqrt has no derivative at {a.val}")
    value = math.sqrt(a.val)
    return a._chain(value, 0.5 / value)


def ad_pow(base: ADLike, exponent: ADLike) -> ADNumber:
    """base ** exponent; integer exponents use repeated multiplication."""
    if isinstance(exponent, ADNumber):
        b = _as_ad(base, exponent.size)
        return ad_exp(exponent * ad_log(b))
    a = _as_ad(base)
    if isinstance(exponent, int) or float(exponent).is_integer():
        n = int(exponent)
        if n < 0:
            return ad_pow(a, -n).inverse()
        result = constant(1.0, a.size)
        for _ in range(n):
            result = result * a
        return result
    if a.val <= 0.0:
        raise ADDomainError(f"Real power {exponent} is undefined at {a.val}")
    p = float(exponent)
    return a._chain(a.val**p, p * a.val ** (p - 1.0))


def ad_atan2(y: ADLike, x: ADLike) -> ADNumber:
    """Two-argument arctangent with the total derivative (x dy - y dx) / (x^2 + y^2)."""
    size = y.size if isinstance(y, ADNumber) else (x.size if isinstance(x, ADNumber) else 1)
    a, b = _as_ad(y, size), _as_ad(x, size)
    r2 = a.val**2 + b.val**2
    if r2 == 0.0:
        raise ADDomainError("atan2 has no derivative at the origin")
    grads = (b.val * a.grads - a.val * b.grads) / r2
    return ADNumber(math.atan2(a.val, b.val), grads)


def derivative(f: Callable[[ADNumber], ADLike], x: float) -> float:
    """f'(x) by one forward pass."""
    result = f(lift(x))
    return result.derivative(0) if isinstance(result, ADNumber) else 0.0


def gradient(f: Callable[..., ADLike], point: Sequence[float]) -> np.ndarray:
    """All partial derivatives of f at `point` in one forward pass."""
    size = len(point)
    args = [lift(float(x), i, size) for i, x in enumerate(point)]
    result = f(*args)
    if isinstance(result, ADNumber):
        return result.grads.copy()
    return np.zeros(size)
