"""Bivector coordinates and the map between PGA and classical velocities.

Velocity bivectors of P(R*_{3,0,1}) are stored as six coordinates in the
order e01, e02, e03, e23, e31, e12. A body point R moves with velocity
2 Omega x R, which is the only place the factor of two enters.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..algebra.blades import parse_blade
from ..algebra.multivector import Multivector
from ..algebra.signature import Signature, SignatureMismatchError
from ..geometry.primitives import D301, point3

BIVECTOR_BASIS: tuple[str, ...] = ("e01", "e02", "e03", "e23", "e31", "e12")

Vector3 = tuple[float, float, float]


def blade_slots(tokens: tuple[str, ...], sig: Signature) -> tuple[np.ndarray, np.ndarray]:
    """Signs and coefficient indices of `tokens`, so coords = signs * coeffs[index]."""
    parsed = [parse_blade(token, sig) for token in tokens]
    signs = np.array([float(sign) for sign, _ in parsed])
    index = np.array([bits for _, bits in parsed], dtype=np.int64)
    signs.setflags(write=False)
    index.setflags(write=False)
    return signs, index


BIVECTOR_SIGNS, BIVECTOR_INDEX = blade_slots(BIVECTOR_BASIS, D301)


def bivector_coords(b: Multivector) -> np.ndarray:
    """Six coordinates of the bivector part of `b`."""
    if b.sig != D301:
        raise SignatureMismatchError(f"Bivector coordinates need {D301}, got {b.sig}")
    return BIVECTOR_SIGNS * b.coeffs[BIVECTOR_INDEX]


def embed_bivector(coords: np.ndarray) -> np.ndarray:
    """Dense d301 coefficient vector of six bivector coordinates."""
    dense = np.zeros(D301.size)
    dense[BIVECTOR_INDEX] = BIVECTOR_SIGNS * coords
    return dense


def bivector_from_coords(coords: np.ndarray | list[float]) -> Multivector:
    values = np.asarray(coords, dtype=float)
    if values.shape != (6,):
        raise ValueError(f"Expected 6 bivector coordinates, got shape {values.shape}")
    return Multivector(D301, embed_bivector(values))


@lru_cache(maxsize=1)
def pairing_matrix() -> np.ndarray:
    """W[j, k] = pseudoscalar weight of B_j ^ B_k over the coordinate basis."""
    basis = [Multivector.blade(D301, token) for token in BIVECTOR_BASIS]
    matrix = np.array([[a.wedge(b).pseudoscalar for b in basis] for a in basis])
    matrix.setflags(write=False)
    return matrix


@lru_cache(maxsize=1)
def pairing_inverse() -> np.ndarray:
    """J^-1 over the coordinate basis; W is its own inverse for this ordering."""
    inverse = np.linalg.inv(pairing_matrix())
    inverse.setflags(write=False)
    return inverse


def ideal_coords(v: Multivector) -> np.ndarray:
    """x, y, z weights of the E1, E2, E3 part of a trivector."""
    return np.array([v["E1"], v["E2"], v["E3"]])


def point_velocity(omega: Multivector, position: Vector3 | Multivector) -> np.ndarray:
    """Velocity of a body point under the velocity bivector Omega."""
    point = position if isinstance(position, Multivector) else point3(*position)
    return ideal_coords(2.0 * omega.grade(2).commutator(point))


@lru_cache(maxsize=None)
def velocity_map(position: Vector3) -> np.ndarray:
    """3x6 matrix L with point_velocity(Omega, R) = L @ bivector_coords(Omega)."""
    columns = [point_velocity(Multivector.blade(D301, token), position) for token in BIVECTOR_BASIS]
    matrix = np.column_stack(columns)
    matrix.setflags(write=False)
    return matrix


def classical_velocity(omega: Multivector) -> tuple[np.ndarray, np.ndarray]:
    """Angular velocity w and origin velocity v with point velocities v + w x r."""
    origin = point_velocity(omega, (0.0, 0.0, 0.0))
    along_x = point_velocity(omega, (1.0, 0.0, 0.0)) - origin
    along_y = point_velocity(omega, (0.0, 1.0, 0.0)) - origin
    # w x e_x = (0, wz, -wy) and w x e_y = (-wz, 0, wx)
    angular = np.array([along_y[2], -along_x[2], along_x[1]])
    return angular, origin


@lru_cache(maxsize=1)
def _classical_matrix() -> np.ndarray:
    columns = []
    for token in BIVECTOR_BASIS:
        angular, linear = classical_velocity(Multivector.blade(D301, token))
        columns.append(np.concatenate([angular, linear]))
    return np.column_stack(columns)


def body_velocity_from_classical(angular: Vector3, linear: Vector3) -> Multivector:
    """Velocity bivector turning with `angular` while the origin moves with `linear`."""
    target = np.concatenate([np.asarray(angular, dtype=float), np.asarray(linear, dtype=float)])
    return bivector_from_coords(np.linalg.solve(_classical_matrix(), target))


def classical_matrix() -> np.ndarray:
    """C with (w, v) = C @ bivector_coords(Omega)."""
    return _classical_matrix().copy()
