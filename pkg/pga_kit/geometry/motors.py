"""Versors, sandwiches, bivector axes and the motor exp/log/sqrt.

Sign conventions:
    - exp(B) rotates clockwise about B's axis for positive weights; the
      catalogs wrap it so angles are counter-clockwise (right-handed).
    - The ideal axis of a bivector is B^ I, so e12 + e03 decomposes with
      u = 1 and v = -1.
    - log folds rotation weights into (-pi/2, pi/2], where exp(log m) may
      return -m; both act identically as sandwiches.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Union

from ..algebra.multivector import Multivector
from ..algebra.signature import Signature
from ..errors import PGAError
from .dual import DualNumber, dual_scale
from .norms import (
    IDEAL_THRESHOLD,
    IdealElementError,
    NotNormalizedError,
    ideal_norm,
    is_ideal,
    normalize,
    normalize_motor,
)

logger = logging.getLogger(__name__)

DRIFT_TOLERANCE = 1e-12


class NotAVersorError(PGAError, ValueError):
    """Raised when a sandwich operator is requested for a non-versor."""

    pass


class NotABivectorError(PGAError, ValueError):
    """Raised when a bivector-only operation gets other grades."""

    pass


class IdealBivectorError(PGAError, ValueError):
    """Raised when an axis is requested for an ideal bivector (a translation generator)."""

    pass


class AxisUndeterminedError(PGAError, ValueError):
    """Raised for the logarithm of -1, whose axis is arbitrary."""

    pass


class HalfTurnAmbiguityError(PGAError, ValueError):
    """Raised when a square root is requested for a half-turn (-1) motor."""

    pass


class UnsupportedBivectorError(PGAError, ValueError):
    """Raised for bivectors whose exponential is outside the supported metrics."""

    pass


class PGAInternalError(PGAError, RuntimeError):
    """Raised for states the algebra says cannot occur."""

    pass


@dataclass(frozen=True)
class Motor:
    """Even-graded element acting by sandwich; normalized motors satisfy m m~ = 1."""

    mv: Multivector

    def __post_init__(self) -> None:
        if not self.mv.is_even(1e-12 * max(self.mv.max_abs(), 1.0)):
            raise NotAVersorError(f"Motor must be even-graded, got grades {self.mv.grades()}")

    @classmethod
    def identity(cls, sig: Signature) -> Motor:
        return cls(Multivector.scalar_of(sig, 1.0))

    @property
    def sig(self) -> Signature:
        return self.mv.sig

    def apply(self, x: Multivector) -> Multivector:
        """m X m~."""
        return self.mv * x * self.mv.reverse()

    def reverse(self) -> Motor:
        return Motor(self.mv.reverse())

    def __mul__(self, other: Motor) -> Motor:
        if not isinstance(other, Motor):
            return NotImplemented
        return Motor(self.mv * other.mv)

    def __neg__(self) -> Motor:
        return Motor(-self.mv)

    def renormalized(self) -> Motor:
        return Motor(normalize_motor(self.mv))

    def drift(self) -> float:
        """max |m m~ - 1| over all coefficients."""
        return (self.mv * self.mv.reverse() - 1.0).max_abs()

    def allclose(self, other: Motor | Multivector, atol: float = 1e-12) -> bool:
        target = other.mv if isinstance(other, Motor) else other
        return self.mv.allclose(target, atol)

    def same_action(self, other: Motor | Multivector, atol: float = 1e-10) -> bool:
        """Equal up to the global sign that both sandwiches ignore."""
        target = other.mv if isinstance(other, Motor) else other
        return self.mv.allclose(target, atol) or self.mv.allclose(-target, atol)

    def __str__(self) -> str:
        return str(self.mv)


Versor = Union[Motor, Multivector]


@dataclass(frozen=True)
class AxisDecomposition:
    """B = u B^ + v B^perp with B^^2 = -1 and B^perp = B^ I ideal."""

    u: float
    v: float
    axis: Multivector
    axis_perp: Multivector

    @property
    def norm(self) -> DualNumber:
        return DualNumber(self.u, self.v)

    @property
    def pitch(self) -> float:
        """v:u, infinite for a pure translation generator."""
        return self.v / self.u if self.u else math.inf

    def reconstruct(self) -> Multivector:
        return self.axis * self.u + self.axis_perp * self.v


@dataclass(frozen=True)
class ScrewParameters:
    """Rotation angle, travel along the axis, the axis itself and the pitch."""

    angle: float
    distance: float
    axis: Multivector
    pitch: float


@dataclass(frozen=True)
class LineProduct:
    """Grade split of -Omega*Sigma for two normalized euclidean 3D lines.

    `alpha` is the angle along the common normal and `distance` the oriented
    distance between the lines measured along it.
    """

    cos_alpha: float
    alpha: float
    distance: float
    common_normal: Multivector | None
    bivector: Multivector
    pseudoscalar: float
    common_plane: Multivector | None = field(default=None)
    common_point: Multivector | None = field(default=None)

    @property
    def intersecting(self) -> bool:
        return self.common_point is not None


def _mv(x: Versor) -> Multivector:
    return x.mv if isinstance(x, Motor) else x


def _require_bivector(b: Multivector) -> None:
    tol = 1e-12 * max(b.max_abs(), 1.0)
    if b.grades(tol) not in ([], [2]):
        raise NotABivectorError(f"Expected a bivector, got grades {b.grades(tol)}")


def sandwich(g: Versor, x: Multivector) -> Multivector:
    """g X g~ for motors, g X g^-1 for other versors.

    Raises:
        NotAVersorError: If g g~ is not a non-zero scalar.
    """
    if isinstance(g, Motor):
        return g.apply(x)
    square = g * g.reverse()
    scale = max(g.max_abs() ** 2, 1.0)
    if not square.is_scalar(1e-10 * scale) or abs(square.scalar) <= 1e-12 * scale:
        raise NotAVersorError(f"{g} is not a versor")
    return g * x * g.reverse() / square.scalar


def _bivector_norm(b: Multivector) -> DualNumber:
    """-(B.B + B^B) as a dual number."""
    square = b * b
    return DualNumber(-square.scalar, -square.pseudoscalar)


def axis_decompose(b: Multivector) -> AxisDecomposition:
    """Split a bivector into its euclidean axis and the commuting ideal axis.

    Raises:
        IdealBivectorError: If b is ideal.
        PGAInternalError: If b is not ideal but has no euclidean weight.
    """
    _require_bivector(b)
    if is_ideal(b):
        raise IdealBivectorError(f"{b} is ideal and has no euclidean axis")
    squared = _bivector_norm(b)
    if squared.s <= 0.0:
        raise PGAInternalError(f"Bivector {b} has non-positive weight {squared.s}")
    weight = squared.sqrt()
    axis = dual_scale(weight.inverse(), b)
    axis_perp = axis * Multivector.blade(b.sig, "I")
    return AxisDecomposition(weight.s, weight.p, axis, axis_perp)


def exp_bivector(b: Multivector) -> Motor:
    """e^B for a bivector, simple or not.

    Raises:
        NotABivectorError: If b has other grades.
        UnsupportedBivectorError: If B^2 is positive with a pseudoscalar part.
    """
    _require_bivector(b)
    sig = b.sig
    if b.is_zero():
        return Motor.identity(sig)
    if is_ideal(b):
        return Motor(1.0 + b)

    squared = _bivector_norm(b)
    if squared.s < 0.0:
        # B^2 > 0: hyperbolic branch, only for simple bivectors
        if abs(squared.p) > IDEAL_THRESHOLD * max(b.max_abs() ** 2, 1.0):
            raise UnsupportedBivectorError(f"exp of {b} with positive square is unsupported")
        u = math.sqrt(-squared.s)
        return Motor(math.cosh(u) + b * (math.sinh(u) / u))
    if sig.z == 0 and abs(squared.p) > IDEAL_THRESHOLD * max(b.max_abs() ** 2, 1.0):
        raise UnsupportedBivectorError(f"Non-simple bivector {b} needs a degenerate metric")

    decomposition = axis_decompose(b)
    u, v = decomposition.u, decomposition.v
    cos_part = DualNumber(math.cos(u), -v * math.sin(u))
    sin_part = DualNumber(math.sin(u), v * math.cos(u))
    result = cos_part.to_multivector(sig) + dual_scale(sin_part, decomposition.axis)
    return Motor(result)


def log_motor(m: Versor, fold: bool = True) -> Multivector:
    """Bivector L with exp(L) = m (or -m when `fold` moves the weight).

    With `fold` the rotation weight lies in (-pi/2, pi/2]; without it in
    [0, pi).

    Raises:
        AxisUndeterminedError: For m = -1.
        PGAInternalError: If both the scalar and bivector weights vanish.
    """
    mv = normalize_motor(_mv(m))
    s1 = mv.scalar
    p1 = mv.pseudoscalar
    b = mv.grade(2)

    if is_ideal(b):
        if b.max_abs() <= 1e-14 and s1 < 0:
            raise AxisUndeterminedError("Logarithm of -1 has no determined axis")
        return b / s1

    decomposition = axis_decompose(b)
    s2, p2 = decomposition.u, decomposition.v
    u = math.atan2(s2, s1)
    if abs(s1) >= abs(s2):
        v = p2 / s1
    elif s2 != 0.0:
        v = -p1 / s2
    else:
        raise PGAInternalError("Motor with vanishing scalar and bivector weight")
    if fold and u > math.pi / 2:
        u -= math.pi
    logger.debug("log_motor: u=%s v=%s", u, v)
    return dual_scale(DualNumber(u, v), decomposition.axis)


def log_motor_closed_form(m: Versor) -> Multivector:
    """Closed-form logarithm via atan(s/<m>0) and the dual axis normalization.

    Agrees with `log_motor(m, fold=True)` wherever <m>0 != 0.

    Raises:
        HalfTurnAmbiguityError: If <m>0 is zero (a quarter-period weight).
    """
    mv = normalize_motor(_mv(m))
    scalar = mv.scalar
    b = mv.grade(2)
    if abs(scalar) <= 1e-14:
        raise HalfTurnAmbiguityError("Closed-form logarithm needs a non-zero scalar part")
    if is_ideal(b):
        return b / scalar
    s = math.sqrt(-(b * b).scalar)
    p = -b.wedge(b).pseudoscalar / (2.0 * s)
    b_hat = dual_scale(DualNumber(1.0 / s, -p / (s * s)), b)
    weight = DualNumber(math.atan(s / scalar), p / scalar)
    return dual_scale(weight, b_hat)


def screw_parameters(m: Versor) -> ScrewParameters:
    """Rotation angle, signed travel along the axis, axis and pitch of a motor."""
    log = log_motor(m, fold=False)
    if is_ideal(log):
        if log.is_zero(1e-14):
            return ScrewParameters(0.0, 0.0, log, math.nan)
        size = ideal_norm(log, signed=False)
        return ScrewParameters(0.0, 2.0 * size, log / size, math.inf)
    decomposition = axis_decompose(log)
    u, v = decomposition.u, decomposition.v
    return ScrewParameters(2.0 * u, 2.0 * v, decomposition.axis, decomposition.pitch)


def sqrt_motor(g: Versor) -> Motor:
    """Motor r with r r = g, computed as normalize(1 + g).

    Raises:
        HalfTurnAmbiguityError: If g is (close to) -1.
    """
    mv = _mv(g)
    shifted = 1.0 + mv
    d = DualNumber.of(shifted * shifted.reverse())
    if d.s <= 1e-12:
        raise HalfTurnAmbiguityError(f"Square root of {mv} is ambiguous (half turn)")
    return Motor(normalize_motor(shifted))


def motor_between(x1: Multivector, x2: Multivector) -> Motor:
    """Motor carrying x1 onto x2, the square root of x2 x1^-1.

    Inputs are normalized first. For planes and 2D lines x^-1 = x.

    Raises:
        HalfTurnAmbiguityError: If x2 = -x1.
        NotInvertibleError: If either input is ideal.
    """
    a = normalize(x1)
    b = normalize(x2)
    return sqrt_motor(b * a.inverse())


def line_product_decompose(omega: Multivector, sigma: Multivector) -> LineProduct:
    """Decompose the product of two normalized euclidean 3D lines.

    The product -Omega Sigma is a motor cos(a) + ... whose log gives the angle
    along the common normal and the distance between the lines. Intersecting
    lines also get their common plane and point.

    Raises:
        IdealElementError: If either line is ideal.
        NotNormalizedError: If either line does not square to -1.
    """
    for name, line in (("Omega", omega), ("Sigma", sigma)):
        _require_bivector(line)
        if is_ideal(line):
            raise IdealElementError(f"{name} = {line} is an ideal line")
        square = line * line
        if abs(square.scalar + 1.0) > 1e-10 or abs(square.pseudoscalar) > 1e-10:
            raise NotNormalizedError(f"{name} = {line} is not a normalized line")

    product = -(omega * sigma)
    s1 = product.scalar
    p1 = product.pseudoscalar
    bivector = product.grade(2)

    if is_ideal(bivector):
        # parallel or equal lines: no euclidean common normal
        distance = 0.0 if bivector.is_zero(1e-12) else float("nan")
        alpha = 0.0 if s1 > 0 else math.pi
        return LineProduct(s1, alpha, distance, None, bivector, p1)

    decomposition = axis_decompose(bivector)
    s2, p2 = decomposition.u, decomposition.v
    alpha = math.atan2(s2, s1)
    distance = p2 / s1 if abs(s1) >= abs(s2) else -p1 / s2

    plane = point = None
    if abs(omega.wedge(sigma).pseudoscalar) <= 1e-10:
        e0 = Multivector.blade(omega.sig, "e0")
        plane = omega.wedge(e0).join(sigma)
        point = bivector.wedge(e0).join(omega).wedge(sigma)
        distance = 0.0
    return LineProduct(
        cos_alpha=s1,
        alpha=alpha,
        distance=distance,
        common_normal=decomposition.axis,
        bivector=bivector,
        pseudoscalar=p1,
        common_plane=plane,
        common_point=point,
    )


def reflection_group(
    a: Multivector, b: Multivector, x: Multivector, limit: int = 64, atol: float = 1e-9
) -> list[Multivector]:
    """All distinct images of x under the group generated by mirrors a and b.

    Images are normalized before comparison. Stops after `limit` images if the
    group is infinite.
    """
    mirrors = (normalize(a), normalize(b))
    seen = [normalize(x)]
    frontier = [seen[0]]
    while frontier and len(seen) < limit:
        next_frontier = []
        for item in frontier:
            for mirror in mirrors:
                image = normalize(mirror * item * mirror)
                if not any(image.allclose(known, atol) for known in seen):
                    seen.append(image)
                    next_frontier.append(image)
        frontier = next_frontier
    if len(seen) >= limit:
        logger.warning("Reflection group orbit reached the %d image limit", limit)
    return seen
