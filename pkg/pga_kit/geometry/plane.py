"""Constructions and measurements in the euclidean plane, P(R*_{2,0,1}).

Every function normalizes its multivector arguments first; pass raw=True to
use them as given. Lines are 1-vectors and points 2-vectors.
"""

from __future__ import annotations

import logging
import math
from typing import Sequence

from ..algebra.multivector import Multivector, join_all
from ..errors import PGAError
from ..models.measure import Measure
from .motors import Motor, exp_bivector, log_motor, motor_between, sandwich
from .norms import euclidean_norm, ideal_norm, is_ideal, normalize, normalized_args, unit

logger = logging.getLogger(__name__)


class DegenerateLoopError(PGAError, ValueError):
    """Raised for loops or meshes with too few vertices."""

    pass


def _clip(value: float) -> float:
    return max(-1.0, min(1.0, value))


@normalized_args
def meet_lines(a: Multivector, b: Multivector) -> Multivector:
    """Intersection point a ^ b (ideal for parallel lines)."""
    return a.wedge(b)


@normalized_args
def angle_lines(a: Multivector, b: Multivector) -> Measure:
    """cos^-1(a . b); parallel lines give 0 or pi."""
    value = math.acos(_clip(a.inner(b).scalar))
    return Measure(value, "parallel" if is_ideal(a.wedge(b)) else "intersecting")


@normalized_args
def angle_lines_sin(a: Multivector, b: Multivector) -> Measure:
    """sin^-1 ||a ^ b||, the acute angle between two lines."""
    point = a.wedge(b)
    if is_ideal(point):
        return Measure(0.0, "parallel")
    return Measure(math.asin(_clip(euclidean_norm(point))), "intersecting")


@normalized_args
def dist_parallel_lines(a: Multivector, b: Multivector) -> Measure:
    """||a ^ b||_inf for parallel lines; intersecting lines are at distance 0."""
    point = a.wedge(b)
    if not is_ideal(point):
        return Measure(0.0, "intersecting")
    return Measure(ideal_norm(point, signed=False), "parallel")


@normalized_args
def join_points(p: Multivector, q: Multivector) -> Multivector:
    """Joining line P v Q, weighted by the distance between the points."""
    return p.join(q)


@normalized_args
def perp_direction(p: Multivector, q: Multivector) -> Multivector:
    """P x Q, the ideal point perpendicular to the joining line."""
    return p.commutator(q)


@normalized_args
def dist_points(p: Multivector, q: Multivector) -> Measure:
    """||P v Q|| for euclidean points."""
    if is_ideal(p) or is_ideal(q):
        return Measure(math.inf, "ideal")
    line = p.join(q)
    if line.is_zero(1e-14):
        return Measure(0.0, "euclidean")
    return Measure(euclidean_norm(line), "euclidean")


@normalized_args
def dist_points_ideal(p: Multivector, q: Multivector) -> Measure:
    """||P x Q||_inf, the same distance computed through the ideal norm."""
    if is_ideal(p) or is_ideal(q):
        return Measure(math.inf, "ideal")
    return Measure(ideal_norm(p.commutator(q), signed=False), "euclidean")


@normalized_args
def oriented_dist_point_line(p: Multivector, a: Multivector) -> Measure:
    """Signed distance a ^ P; the sign tells the side of the line."""
    value = a.wedge(p).pseudoscalar
    return Measure(value, "ideal" if is_ideal(p) else "euclidean")


@normalized_args
def angle_ideal_point_line(v: Multivector, a: Multivector) -> Measure:
    """sin^-1 ||a ^ V||_inf for a direction V."""
    return Measure(math.asin(_clip(ideal_norm(a.wedge(v)))), "ideal")


@normalized_args
def perp_line_through_point(p: Multivector, a: Multivector) -> Multivector:
    """P . a, the line through P perpendicular to a."""
    return p.inner(a)


@normalized_args
def nearest_point_on_line(p: Multivector, a: Multivector) -> Multivector:
    """(P . a) a, the foot of the perpendicular from P."""
    return p.inner(a) * a


@normalized_args
def parallel_through_point(p: Multivector, a: Multivector) -> Multivector:
    """(P . a) P, the line through P parallel to a."""
    return p.inner(a) * p


@normalized_args
def triangle_area(a: Multivector, b: Multivector, c: Multivector) -> float:
    """Oriented area 1/2 (A v B v C), positive for counter-clockwise order."""
    return 0.5 * join_all([a, b, c]).scalar


def _loop_edges(points: Sequence[Multivector]) -> list[Multivector]:
    if len(points) < 3:
        raise DegenerateLoopError(f"A closed loop needs at least 3 points, got {len(points)}")
    normalized = [normalize(p) for p in points]
    return [
        normalized[i].join(normalized[(i + 1) % len(normalized)]) for i in range(len(normalized))
    ]


def loop_length(points: Sequence[Multivector]) -> float:
    """Perimeter of a closed polygon, sum ||P_i v P_i+1||."""
    return sum(euclidean_norm(edge) for edge in _loop_edges(points) if not edge.is_zero(1e-14))


def loop_area(points: Sequence[Multivector], doubled: bool = False) -> float:
    """Oriented area of a closed polygon from the ideal norm of sum P_i v P_i+1.

    The summed line is (2A) e0; `doubled` returns that ideal norm, twice the area.
    """
    edges = _loop_edges(points)
    total = sum(edges[1:], edges[0])
    value = ideal_norm(total) if not total.is_zero() else 0.0
    return value if doubled else 0.5 * value


def reflect(a: Multivector, x: Multivector) -> Multivector:
    """a X a, reflection of a point or line in the line a."""
    return sandwich(unit(a), x)


def rotor_about_point(p: Multivector, angle: float) -> Motor:
    """Motor rotating counter-clockwise by `angle` around the point P."""
    return exp_bivector(normalize(p) * (-angle / 2.0))


def translator(v: Multivector, distance: float) -> Motor:
    """1 + (d/2) V for a direction V: moves by d along V turned by +90 degrees."""
    return exp_bivector(unit(v) * (distance / 2.0))


def motor_between_lines(a1: Multivector, a2: Multivector) -> Motor:
    """normalize(1 + a2 a1), the motor carrying line a1 onto a2."""
    return motor_between(a1, a2)


def log_2d_motor(g: Motor | Multivector) -> Multivector:
    """cos^-1(<g>0) times the normalized point <g>2.

    Translators (ideal <g>2) return their bivector part directly.
    """
    mv = g.mv if isinstance(g, Motor) else g
    b = mv.grade(2)
    if is_ideal(b):
        return log_motor(mv, fold=False)
    return unit(b) * math.acos(_clip(mv.scalar))


@normalized_args
def decompose_line(m: Multivector, n: Multivector) -> tuple[Multivector, Multivector]:
    """Orthogonal split m = (m . n) n + (m ^ n) n of line m along line n."""
    return m.inner(n) * n, m.wedge(n) * n
