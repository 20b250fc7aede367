"""Constructors and coordinate readers for points, lines and planes.

Hyperplanes are 1-vectors: the line ax + by + c = 0 is a e1 + b e2 + c e0,
and points are n-vectors x E1 + y E2 (+ z E3) + E0, so that
hyperplane ^ point = (ax + by + ... + c) I.
"""

from __future__ import annotations

from ..algebra.multivector import Multivector
from ..algebra.signature import Signature, SignatureError

D201 = Signature.parse("d201")
D301 = Signature.parse("d301")

COORDINATE_TOLERANCE = 1e-14


def point2(x: float, y: float, sig: Signature = D201) -> Multivector:
    return Multivector.from_blades(sig, {"E1": x, "E2": y, "E0": 1.0})


def ideal_point2(x: float, y: float, sig: Signature = D201) -> Multivector:
    """Direction (x, y) as a point at infinity."""
    return Multivector.from_blades(sig, {"E1": x, "E2": y})


def line2(a: float, b: float, c: float, sig: Signature = D201) -> Multivector:
    """The line ax + by + c = 0."""
    return Multivector.from_blades(sig, {"e1": a, "e2": b, "e0": c})


def point3(x: float, y: float, z: float, sig: Signature = D301) -> Multivector:
    return Multivector.from_blades(sig, {"E1": x, "E2": y, "E3": z, "E0": 1.0})


def ideal_point3(x: float, y: float, z: float, sig: Signature = D301) -> Multivector:
    return Multivector.from_blades(sig, {"E1": x, "E2": y, "E3": z})


def plane3(a: float, b: float, c: float, d: float, sig: Signature = D301) -> Multivector:
    """The plane ax + by + cz + d = 0."""
    return Multivector.from_blades(sig, {"e1": a, "e2": b, "e3": c, "e0": d})


def line3(
    point: tuple[float, float, float], direction: tuple[float, float, float]
) -> Multivector:
    """Line through `point` heading along `direction`, as P v V."""
    return point3(*point).join(ideal_point3(*direction))


def point_coords(p: Multivector) -> tuple[float, ...]:
    """Euclidean coordinates of a point, or the direction of an ideal point."""
    n = p.sig.dimension
    weight = p["E0"]
    coords = tuple(p[f"E{i}"] for i in range(1, n + 1))
    if abs(weight) <= COORDINATE_TOLERANCE * max(p.max_abs(), 1.0):
        return coords
    return tuple(c / weight for c in coords)


def translation2(dx: float, dy: float, sig: Signature = D201) -> Multivector:
    """Translator moving points by (dx, dy)."""
    return Multivector.from_blades(sig, {"1": 1.0, "E1": dy / 2.0, "E2": -dx / 2.0})


def translation3(dx: float, dy: float, dz: float, sig: Signature = D301) -> Multivector:
    """Translator moving points by (dx, dy, dz)."""
    return Multivector.from_blades(
        sig, {"1": 1.0, "e01": -dx / 2.0, "e02": -dy / 2.0, "e03": -dz / 2.0}
    )


def euclidean_signature(dimension: int) -> Signature:
    """d201 for the plane, d301 for space."""
    if dimension == 2:
        return D201
    if dimension == 3:
        return D301
    raise SignatureError(f"No euclidean PGA shorthand for dimension {dimension}")
