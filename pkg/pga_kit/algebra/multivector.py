"""Dense multivectors and every product of the algebra."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from numbers import Real
from typing import Iterable, Mapping, Union

import numpy as np

from ..errors import NotInvertibleError
from .blades import parse_blade
from .signature import Signature, SignatureMismatchError
from .tables import CayleyTables, tables_for
from .text import to_text

logger = logging.getLogger(__name__)

Scalar = Union[int, float, np.floating]
Operand = Union["Multivector", Scalar]


@dataclass(frozen=True, eq=False)
class Multivector:
    """Element of the geometric algebra fixed by `sig`.

    Coefficients are indexed by blade bitmask and never mutated after
    construction.
    """

    sig: Signature
    coeffs: np.ndarray

    # numpy scalars on the left defer to __rmul__ and friends
    __array_ufunc__ = None

    def __post_init__(self) -> None:
        coeffs = np.array(self.coeffs, dtype=float)
        if coeffs.shape != (self.sig.size,):
            raise ValueError(
                f"Expected {self.sig.size} coefficients for {self.sig}, got shape {coeffs.shape}"
            )
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, sig: Signature) -> Multivector:
        return cls(sig, np.zeros(sig.size))

    @classmethod
    def scalar_of(cls, sig: Signature, value: float) -> Multivector:
        coeffs = np.zeros(sig.size)
        coeffs[0] = value
        return cls(sig, coeffs)

    @classmethod
    def blade(cls, sig: Signature, token: str, coeff: float = 1.0) -> Multivector:
        """Single blade from a token such as `e12`, `e31`, `E0` or `I`."""
        sign, bits = parse_blade(token, sig)
        coeffs = np.zeros(sig.size)
        coeffs[bits] = sign * coeff
        return cls(sig, coeffs)

    @classmethod
    def from_blades(cls, sig: Signature, terms: Mapping[str, float]) -> Multivector:
        """Sum of blades, e.g. `{"e1": 3, "e2": 4, "e0": 7}`."""
        coeffs = np.zeros(sig.size)
        for token, coeff in terms.items():
            sign, bits = parse_blade(token, sig)
            coeffs[bits] += sign * coeff
        return cls(sig, coeffs)

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def tables(self) -> CayleyTables:
        return tables_for(self.sig)

    @property
    def scalar(self) -> float:
        """Grade-0 coefficient."""
        return float(self.coeffs[0])

    @property
    def pseudoscalar(self) -> float:
        """Coefficient of the canonical pseudoscalar blade."""
        return float(self.coeffs[-1])

    def __getitem__(self, token: str) -> float:
        """Coefficient of a blade token, with the token's sign applied."""
        sign, bits = parse_blade(token, self.sig)
        return sign * float(self.coeffs[bits])

    def grade(self, k: int) -> Multivector:
        """Grade-k part <x>_k."""
        mask = self.tables.grade_mask(k)
        return Multivector(self.sig, np.where(mask, self.coeffs, 0.0))

    def grades(self, tol: float = 0.0) -> list[int]:
        """Grades carrying a coefficient above `tol`."""
        present = self.tables.grades[np.abs(self.coeffs) > tol]
        return sorted({int(g) for g in present})

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.max_abs() <= tol

    def is_scalar(self, tol: float = 0.0) -> bool:
        return self.grades(tol) in ([], [0])

    def is_even(self, tol: float = 0.0) -> bool:
        return all(g % 2 == 0 for g in self.grades(tol))

    def allclose(self, other: Operand, atol: float = 1e-12) -> bool:
        """Componentwise comparison within `atol`."""
        other_mv = self._coerce(other)
        return bool(np.allclose(self.coeffs, other_mv.coeffs, rtol=0.0, atol=atol))

    # ------------------------------------------------------------------
    # Unary operations
    # ------------------------------------------------------------------

    def reverse(self) -> Multivector:
        """Reverse x~, sign (-1)^(k choose 2) per grade."""
        return Multivector(self.sig, self.coeffs * self.tables.reverse_signs)

    def involute(self) -> Multivector:
        """Grade involution, sign (-1)^k per grade."""
        return Multivector(self.sig, self.coeffs * self.tables.involution_signs)

    def dual(self) -> Multivector:
        """Poincare duality J: grade k maps to grade n+1-k."""
        t = self.tables
        return Multivector(self.sig, (t.dual_signs * self.coeffs)[t.complement])

    def undual(self) -> Multivector:
        """Exact inverse of `dual`."""
        t = self.tables
        return Multivector(self.sig, t.dual_signs * self.coeffs[t.complement])

    def polarity(self) -> Multivector:
        """Right multiplication by the pseudoscalar, x I."""
        return self * Multivector.blade(self.sig, "I")

    def inverse(self) -> Multivector:
        """Inverse of a versor, x~ / (x x~).

        Raises:
            NotInvertibleError: If x x~ is not a non-zero scalar.
        """
        rev = self.reverse()
        square = self * rev
        scale = max(self.max_abs() ** 2, 1.0)
        if not square.is_scalar(1e-12 * scale) or abs(square.scalar) <= 1e-12 * scale:
            raise NotInvertibleError(f"{self} has no versor inverse")
        return rev / square.scalar

    # ------------------------------------------------------------------
    # Binary products
    # ------------------------------------------------------------------

    def _coerce(self, other: Operand) -> Multivector:
        if isinstance(other, Multivector):
            if other.sig != self.sig:
                raise SignatureMismatchError(f"Cannot combine {self.sig} with {other.sig}")
            return other
        if isinstance(other, Real):
            return Multivector.scalar_of(self.sig, float(other))
        return NotImplemented

    def geometric(self, other: Operand) -> Multivector:
        other_mv = self._coerce(other)
        return Multivector(self.sig, self.tables.geometric.apply(self.coeffs, other_mv.coeffs))

    def wedge(self, other: Operand) -> Multivector:
        """Outer product, the meet of the dual algebra."""
        other_mv = self._coerce(other)
        return Multivector(self.sig, self.tables.wedge.apply(self.coeffs, other_mv.coeffs))

    def inner(self, other: Operand) -> Multivector:
        """Lowest-grade part of the product, blade pair by blade pair."""
        other_mv = self._coerce(other)
        return Multivector(self.sig, self.tables.inner.apply(self.coeffs, other_mv.coeffs))

    def join(self, other: Operand) -> Multivector:
        """Regressive product J^-1(J(x) ^ J(y))."""
        other_mv = self._coerce(other)
        return self.dual().wedge(other_mv.dual()).undual()

    def commutator(self, other: Operand) -> Multivector:
        """x x y = (xy - yx)/2."""
        other_mv = self._coerce(other)
        return (self.geometric(other_mv) - other_mv.geometric(self)) * 0.5

    def __add__(self, other: Operand) -> Multivector:
        other_mv = self._coerce(other)
        if other_mv is NotImplemented:
            return NotImplemented
        return Multivector(self.sig, self.coeffs + other_mv.coeffs)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> Multivector:
        other_mv = self._coerce(other)
        if other_mv is NotImplemented:
            return NotImplemented
        return Multivector(self.sig, self.coeffs - other_mv.coeffs)

    def __rsub__(self, other: Operand) -> Multivector:
        return (-self) + other

    def __neg__(self) -> Multivector:
        return Multivector(self.sig, -self.coeffs)

    def __mul__(self, other: Operand) -> Multivector:
        if isinstance(other, Real):
            return Multivector(self.sig, self.coeffs * float(other))
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.geometric(other)

    def __rmul__(self, other: Operand) -> Multivector:
        if isinstance(other, Real):
            return Multivector(self.sig, self.coeffs * float(other))
        return NotImplemented

    def __truediv__(self, other: Scalar) -> Multivector:
        if not isinstance(other, Real):
            return NotImplemented
        return Multivector(self.sig, self.coeffs / float(other))

    def __xor__(self, other: Operand) -> Multivector:
        return self.wedge(other)

    def __rxor__(self, other: Operand) -> Multivector:
        return self._coerce(other).wedge(self)

    def __and__(self, other: Operand) -> Multivector:
        return self.join(other)

    def __rand__(self, other: Operand) -> Multivector:
        return self._coerce(other).join(self)

    def __or__(self, other: Operand) -> Multivector:
        return self.inner(other)

    def __ror__(self, other: Operand) -> Multivector:
        return self._coerce(other).inner(self)

    def __invert__(self) -> Multivector:
        return self.reverse()

    def __pow__(self, exponent: int) -> Multivector:
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Multivector.scalar_of(self.sig, 1.0)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Multivector({self.sig.name}, {to_text(self)})"


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    return a.geometric(b)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    return a.wedge(b)


def inner(a: Multivector, b: Multivector) -> Multivector:
    return a.inner(b)


def join(a: Multivector, b: Multivector) -> Multivector:
    return a.join(b)


def commutator(a: Multivector, b: Multivector) -> Multivector:
    return a.commutator(b)


def reverse(x: Multivector) -> Multivector:
    return x.reverse()


def grade_involution(x: Multivector) -> Multivector:
    return x.involute()


def inverse(x: Multivector) -> Multivector:
    return x.inverse()


def polarity(x: Multivector) -> Multivector:
    return x.polarity()


def grade_part(x: Multivector, k: int) -> Multivector:
    if not 0 <= k <= x.sig.n_generators:
        raise ValueError(f"Grade {k} outside 0..{x.sig.n_generators}")
    return x.grade(k)


def poincare_dual(x: Multivector) -> Multivector:
    return x.dual()


def poincare_undual(x: Multivector) -> Multivector:
    return x.undual()


def join_all(items: Iterable[Multivector]) -> Multivector:
    """Left-folded join of several elements (P v Q v R ...)."""
    iterator = iter(items)
    result = next(iterator)
    for item in iterator:
        result = result.join(item)
    return result


def meet_all(items: Iterable[Multivector]) -> Multivector:
    """Left-folded wedge of several elements."""
    iterator = iter(items)
    result = next(iterator)
    for item in iterator:
        result = result.wedge(item)
    return result


class Algebra:
    """Convenience handle on one signature: blade lookup and constructors.

    Example:
        alg = Algebra(Signature.parse("d201"))
        P = alg.E0 + 2 * alg.E1
    """

    def __init__(self, sig: Signature | str):
        self.sig = Signature.parse(sig) if isinstance(sig, str) else sig

    def blade(self, token: str, coeff: float = 1.0) -> Multivector:
        return Multivector.blade(self.sig, token, coeff)

    def scalar(self, value: float) -> Multivector:
        return Multivector.scalar_of(self.sig, value)

    def zero(self) -> Multivector:
        return Multivector.zero(self.sig)

    def vector(self, coeffs: Iterable[float]) -> Multivector:
        """1-vector sum c_i e_i over the generators."""
        values = np.zeros(self.sig.size)
        for index, coeff in enumerate(coeffs):
            values[1 << index] = coeff
        return Multivector(self.sig, values)

    def from_blades(self, terms: Mapping[str, float]) -> Multivector:
        return Multivector.from_blades(self.sig, terms)

    @property
    def I(self) -> Multivector:  # noqa: E743
        return self.blade("I")

    def __getattr__(self, name: str) -> Multivector:
        if name.startswith(("e", "E")):
            return self.blade(name)
        raise AttributeError(name)
