"""Constructions and measurements in euclidean space, P(R*_{3,0,1}).

Planes are 1-vectors, lines 2-vectors and points 3-vectors. Functions
decorated with `normalized_args` accept raw=True to skip normalization.
"""

from __future__ import annotations

import logging
import math
from typing import Sequence

from ..algebra.multivector import Multivector, join_all
from ..errors import PGAError
from ..models.measure import Measure
from .motors import (
    Motor,
    axis_decompose,
    exp_bivector,
    line_product_decompose,
    sandwich,
)
from .norms import (
    euclidean_norm,
    ideal_norm,
    is_ideal,
    normalize,
    normalized_args,
    unit,
)
from .plane import DegenerateLoopError

logger = logging.getLogger(__name__)

PARALLEL_TOLERANCE = 1e-10

Triangle = tuple[Multivector, Multivector, Multivector]


class ParallelLinesError(PGAError, ValueError):
    """Raised when a formula is singular for parallel lines.

    `fallback` carries the value computed through the ideal-norm route.
    """

    def __init__(self, message: str, fallback: Measure | None = None):
        super().__init__(message)
        self.fallback = fallback


def _clip(value: float) -> float:
    return max(-1.0, min(1.0, value))


def _e0(x: Multivector) -> Multivector:
    return Multivector.blade(x.sig, "e0")


@normalized_args
def meet_planes(a: Multivector, b: Multivector) -> Multivector:
    """Intersection line a ^ b."""
    return a.wedge(b)


@normalized_args
def angle_planes(a: Multivector, b: Multivector) -> Measure:
    """cos^-1(a . b); parallel planes give 0 or pi."""
    value = math.acos(_clip(a.inner(b).scalar))
    return Measure(value, "parallel" if is_ideal(a.wedge(b)) else "intersecting")


@normalized_args
def angle_planes_sin(a: Multivector, b: Multivector) -> Measure:
    """sin^-1 ||a ^ b||."""
    line = a.wedge(b)
    if is_ideal(line):
        return Measure(0.0, "parallel")
    return Measure(math.asin(_clip(euclidean_norm(line))), "intersecting")


@normalized_args
def dist_parallel_planes(a: Multivector, b: Multivector) -> Measure:
    """||a ^ b||_inf; intersecting planes are at distance 0."""
    line = a.wedge(b)
    if not is_ideal(line):
        return Measure(0.0, "intersecting")
    return Measure(ideal_norm(line, signed=False), "parallel")


@normalized_args
def join_points3(p: Multivector, q: Multivector) -> Multivector:
    """Joining line P v Q."""
    return p.join(q)


@normalized_args
def meet3_planes(a: Multivector, b: Multivector, c: Multivector) -> Multivector:
    """Intersection point a ^ b ^ c."""
    return a.wedge(b).wedge(c)


@normalized_args
def join3_points(p: Multivector, q: Multivector, r: Multivector) -> Multivector:
    """Joining plane P v Q v R."""
    return join_all([p, q, r])


@normalized_args
def meet_line_plane(omega: Multivector, a: Multivector) -> Multivector:
    """Point where the line Omega pierces the plane a."""
    return omega.wedge(a)


@normalized_args
def join_point_line(p: Multivector, omega: Multivector) -> Multivector:
    """Plane P v Omega through a point and a line."""
    return p.join(omega)


@normalized_args
def dist_point_plane(p: Multivector, a: Multivector) -> Measure:
    """Signed distance a ^ P."""
    value = a.wedge(p).pseudoscalar
    return Measure(value, "ideal" if is_ideal(p) else "euclidean")


@normalized_args
def angle_ideal_point_plane(v: Multivector, a: Multivector) -> Measure:
    """sin^-1 ||a ^ V||_inf for a direction V."""
    return Measure(math.asin(_clip(ideal_norm(a.wedge(v)))), "ideal")


@normalized_args
def perp_line_to_join(p: Multivector, q: Multivector) -> Multivector:
    """P x Q."""
    return p.commutator(q)


@normalized_args
def dist_points3(p: Multivector, q: Multivector) -> Measure:
    """||P v Q||, cross-checked against ||P x Q||_inf by the tests."""
    if is_ideal(p) or is_ideal(q):
        return Measure(math.inf, "ideal")
    line = p.join(q)
    if line.is_zero(1e-14):
        return Measure(0.0, "euclidean")
    return Measure(euclidean_norm(line), "euclidean")


@normalized_args
def perp_line_point_plane(p: Multivector, a: Multivector) -> Multivector:
    """P . a, the line through P perpendicular to plane a."""
    return p.inner(a)


@normalized_args
def project_point_plane(p: Multivector, a: Multivector) -> Multivector:
    """(P . a) a, the foot of the perpendicular from P."""
    return p.inner(a) * a


@normalized_args
def project_plane_point(p: Multivector, a: Multivector) -> Multivector:
    """(P . a) P, the plane through P parallel to a."""
    return p.inner(a) * p


@normalized_args
def plane_through_line_perp_plane(omega: Multivector, a: Multivector) -> Multivector:
    """Omega . a, the plane through Omega perpendicular to a."""
    return omega.inner(a)


@normalized_args
def project_line_plane(omega: Multivector, a: Multivector) -> Multivector:
    """(Omega . a) a, the projection of Omega onto a."""
    return omega.inner(a) * a


@normalized_args
def project_plane_line(omega: Multivector, a: Multivector) -> Multivector:
    """(Omega . a) Omega, the plane through Omega closest to a."""
    return omega.inner(a) * omega


@normalized_args
def plane_through_point_perp_line(p: Multivector, omega: Multivector) -> Multivector:
    """P . Omega."""
    return p.inner(omega)


@normalized_args
def project_point_line(p: Multivector, omega: Multivector) -> Multivector:
    """(P . Omega) Omega, the nearest point of Omega to P."""
    return p.inner(omega) * omega


@normalized_args
def project_line_point(p: Multivector, omega: Multivector) -> Multivector:
    """(P . Omega) P, the line through P parallel to Omega."""
    return p.inner(omega) * p


@normalized_args
def perp_line_through_point(p: Multivector, omega: Multivector) -> Multivector:
    """((P . Omega) Omega) v P."""
    return (p.inner(omega) * omega).grade(3).join(p)


@normalized_args
def orthogonal_line_through_point(p: Multivector, omega: Multivector) -> Multivector:
    """((Omega . P) ^ Omega) v P: the line through P meeting Omega at a right angle."""
    return omega.inner(p).wedge(omega).join(p)


@normalized_args
def tetra_volume(a: Multivector, b: Multivector, c: Multivector, d: Multivector) -> float:
    """1/3 (A v B v C v D), twice `simplex_volume`."""
    return join_all([a, b, c, d]).scalar / 3.0


@normalized_args
def simplex_volume(a: Multivector, b: Multivector, c: Multivector, d: Multivector) -> float:
    """Oriented tetrahedron volume 1/6 (A v B v C v D)."""
    return join_all([a, b, c, d]).scalar / 6.0


def _triangle_planes(triangles: Sequence[Triangle]) -> list[Multivector]:
    if not triangles:
        raise DegenerateLoopError("A triangle mesh needs at least one triangle")
    return [join_all([normalize(p) for p in triangle]) for triangle in triangles]


def mesh_area(triangles: Sequence[Triangle]) -> float:
    """1/2 sum ||P1 v P2 v P3|| over the faces."""
    return 0.5 * sum(
        euclidean_norm(plane) for plane in _triangle_planes(triangles) if not plane.is_zero(1e-14)
    )


def mesh_volume(triangles: Sequence[Triangle], one_third: bool = False) -> float:
    """Enclosed volume from the ideal norm of the summed face planes.

    The sum is an ideal plane of weight 6V; `one_third` divides it by 3
    instead of 6.
    """
    planes = _triangle_planes(triangles)
    total = sum(planes[1:], planes[0])
    if not is_ideal(total):
        raise DegenerateLoopError("Triangle mesh is not closed")
    weight = ideal_norm(total, signed=False) if not total.is_zero() else 0.0
    return weight / 3.0 if one_third else weight / 6.0


def common_normal(omega1: Multivector, omega2: Multivector) -> Multivector:
    """normalize(Omega1 x Omega2), the line perpendicular to both.

    Raises:
        ParallelLinesError: If the lines are parallel (no unique normal).
    """
    cross = unit(omega1).commutator(unit(omega2))
    if is_ideal(cross):
        raise ParallelLinesError("Parallel lines have no unique common normal")
    return axis_decompose(cross).axis


def angle_between_lines(omega1: Multivector, omega2: Multivector) -> Measure:
    """cos^-1 of the normalized inner product; equal lines give 0."""
    # unit lines square to -1, so the cosine is -(Omega1 . Omega2)
    cosine = -unit(omega1).inner(unit(omega2)).scalar
    value = math.acos(_clip(cosine))
    parallel = abs(math.sin(value)) <= PARALLEL_TOLERANCE
    return Measure(value, "parallel" if parallel else "intersecting")


def _parallel_distance(omega1: Multivector, omega2: Multivector) -> Measure:
    a, b = unit(omega1), unit(omega2)
    # the difference of same-oriented parallel unit lines is ideal
    candidates = [a - b, a + b]
    diff = min(candidates, key=lambda c: abs((c * c).scalar))
    if diff.is_zero(1e-14):
        return Measure(0.0, "parallel")
    return Measure(ideal_norm(diff, signed=False), "parallel")


def dist_between_lines(omega1: Multivector, omega2: Multivector) -> float:
    """csc(alpha) (Omega1 v Omega2), the oriented distance between skew lines.

    Raises:
        ParallelLinesError: For parallel lines; `fallback` holds the distance.
    """
    angle = angle_between_lines(omega1, omega2)
    if angle.case == "parallel":
        fallback = _parallel_distance(omega1, omega2)
        logger.warning("Parallel lines in dist_between_lines, fallback %s", fallback.value)
        raise ParallelLinesError("csc(alpha) is singular for parallel lines", fallback)
    return unit(omega1).join(unit(omega2)).scalar / math.sin(angle.value)


def dist_between_lines_safe(omega1: Multivector, omega2: Multivector) -> Measure:
    """Distance between lines with the parallel case folded into the result."""
    try:
        return Measure(abs(dist_between_lines(omega1, omega2)), "euclidean")
    except ParallelLinesError as e:
        assert e.fallback is not None
        return e.fallback


def common_plane(omega: Multivector, sigma: Multivector) -> Multivector:
    """(Omega ^ e0) v Sigma, the plane shared by two intersecting lines."""
    return unit(omega).wedge(_e0(omega)).join(unit(sigma))


def common_point(omega: Multivector, sigma: Multivector) -> Multivector:
    """((Pi ^ e0) v Omega) ^ Sigma with Pi the common normal."""
    product = line_product_decompose(unit(omega), unit(sigma))
    if product.common_point is None:
        raise ParallelLinesError("Lines do not meet in a euclidean point")
    return product.common_point


def reflect_in_plane(a: Multivector, x: Multivector) -> Multivector:
    """a X a for a point, line or plane X."""
    return sandwich(unit(a), x)


def rotor_about_axis(omega: Multivector, angle: float) -> Motor:
    """Right-handed rotation by `angle` about the oriented line Omega."""
    return exp_bivector(unit(omega) * (-angle / 2.0))


def translator_3d(v: Multivector, distance: float) -> Motor:
    """1 + (E0 v dV) I: moves by `distance` along the direction V."""
    origin = Multivector.blade(v.sig, "E0")
    axis = origin.join(unit(v) * (distance / 2.0))
    return Motor(1.0 + axis * Multivector.blade(v.sig, "I"))


def screw(omega: Multivector, t: float, pitch: float) -> Motor:
    """e^{t(1 + pI) Omega} for a unit line Omega."""
    axis = unit(omega)
    generator = axis * t + axis * Multivector.blade(axis.sig, "I") * (t * pitch)
    return exp_bivector(generator)
