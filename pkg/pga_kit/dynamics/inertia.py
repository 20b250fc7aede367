"""Inertia of a rigid body as a symmetric form on velocity bivectors.

The matrix M satisfies E = w^T M w for the kinetic energy of the body moving
with velocity bivector coordinates w. The momentum Pi is the bivector with
Omega ^ Pi = E I, so the map A of the dynamics equations is Omega -> J(Pi).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, NamedTuple, Union

import numpy as np

from ..algebra.multivector import Multivector
from ..errors import PGAError
from ..geometry.primitives import point_coords
from ..utils.decorators import wrap_errors
from .kinematics import (
    Vector3,
    bivector_coords,
    bivector_from_coords,
    classical_matrix,
    pairing_inverse,
    pairing_matrix,
    velocity_map,
)

logger = logging.getLogger(__name__)

# eigenvalues below this fraction of the largest count as zero
RANK_TOLERANCE = 1e-10
# relative residual above which a momentum rate has no velocity preimage
RANGE_TOLERANCE = 1e-9


class InvalidBodyError(PGAError, ValueError):
    """Raised for an empty mass list or a non-positive mass."""

    pass


class SingularInertiaError(PGAError, ArithmeticError):
    """Raised when A^-1 is needed for a degenerate body."""

    pass


class BodyFileError(PGAError):
    """Raised when a body description file cannot be read or parsed."""

    pass


class PointMass(NamedTuple):
    mass: float
    position: Vector3


MassLike = Union[PointMass, tuple[float, Union[Vector3, Multivector]]]


def _position(point: Vector3 | Multivector) -> Vector3:
    if isinstance(point, Multivector):
        x, y, z = point_coords(point)
        return (x, y, z)
    x, y, z = (float(c) for c in point)
    return (x, y, z)


@dataclass(frozen=True)
class ClassicalInertia:
    """Inertia about the body origin in the 3x3 plus mass form."""

    rotational: np.ndarray
    mass: float
    center: np.ndarray

    def principal_moments(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.rotational)


@dataclass(frozen=True, eq=False)
class InertiaTensor:
    """Symmetric 6x6 energy form over bivector coordinates e01 ... e12.

    The pseudo-inverse is taken once at construction; a body whose point
    masses span less than a plane keeps a singular matrix and can still
    move along the directions it has inertia for.
    """

    matrix: np.ndarray
    pseudo_inverse: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=float)
        if matrix.shape != (6, 6):
            raise InvalidBodyError(f"Inertia must be 6x6, got shape {matrix.shape}")
        scale = max(1.0, float(np.abs(matrix).max()))
        if not np.allclose(matrix, matrix.T, rtol=0.0, atol=1e-12 * scale):
            raise InvalidBodyError("Inertia matrix must be symmetric")
        matrix.setflags(write=False)
        pseudo_inverse = np.linalg.pinv(matrix, rcond=RANK_TOLERANCE, hermitian=True)
        pseudo_inverse.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "pseudo_inverse", pseudo_inverse)

    @property
    def rank(self) -> int:
        values = np.abs(np.linalg.eigvalsh(self.matrix))
        return int(np.count_nonzero(values > RANK_TOLERANCE * values.max()))

    def energy(self, omega: Multivector) -> float:
        w = bivector_coords(omega)
        return float(w @ self.matrix @ w)

    def momentum_coords(self, w: np.ndarray) -> np.ndarray:
        """Coordinates of Pi_c for velocity coordinates w."""
        return pairing_inverse() @ (self.matrix @ w)

    def momentum(self, omega: Multivector) -> Multivector:
        """Pi_c = J^-1(A(Omega_c))."""
        return bivector_from_coords(self.momentum_coords(bivector_coords(omega)))

    def apply(self, omega: Multivector) -> Multivector:
        """A(Omega), an element of the dual exterior algebra."""
        return self.momentum(omega).dual()

    @wrap_errors(SingularInertiaError, "invert inertia", np.linalg.LinAlgError)
    def velocity_coords(self, p: np.ndarray) -> np.ndarray:
        """Velocity coordinates w with momentum_coords(w) = p.

        Raises:
            SingularInertiaError: If p is outside the range of a singular inertia.
        """
        rhs = pairing_matrix() @ p
        w = self.pseudo_inverse @ rhs
        residual = float(np.abs(self.matrix @ w - rhs).max())
        if residual > RANGE_TOLERANCE * max(1.0, float(np.abs(rhs).max())):
            raise np.linalg.LinAlgError(
                f"momentum is outside the range of the inertia (residual {residual:.3g})"
            )
        return w

    def velocity(self, momentum: Multivector) -> Multivector:
        """Omega_c = A^-1(J(Pi_c)), the minimum-norm preimage when A is singular.

        Raises:
            SingularInertiaError: If no velocity carries this momentum.
        """
        return bivector_from_coords(self.velocity_coords(bivector_coords(momentum)))

    def is_positive_definite(self) -> bool:
        return bool(np.all(np.linalg.eigvalsh(self.matrix) > 0.0))

    def classical(self) -> ClassicalInertia:
        """The same inertia in classical (w, v) coordinates."""
        c_inv = np.linalg.inv(classical_matrix())
        k = 2.0 * c_inv.T @ self.matrix @ c_inv
        mass = float(k[3, 3])
        coupling = k[3:, :3] / mass if mass > 0.0 else np.zeros((3, 3))
        center = np.array([coupling[1, 2], coupling[2, 0], coupling[0, 1]])
        return ClassicalInertia(rotational=k[:3, :3], mass=mass, center=center)


def build_inertia(masses: Iterable[MassLike]) -> InertiaTensor:
    """Assemble the inertia of a set of point masses.

    Each mass m at R contributes m/2 L^T L, where L maps velocity bivector
    coordinates to the velocity 2 Omega x R of R.

    Raises:
        InvalidBodyError: If the list is empty or a mass is not positive.
    """
    entries = [PointMass(float(m), _position(p)) for m, p in masses]
    if not entries:
        raise InvalidBodyError("A body needs at least one point mass")
    matrix = np.zeros((6, 6))
    for entry in entries:
        if entry.mass <= 0.0:
            raise InvalidBodyError(f"Masses must be positive, got {entry.mass}")
        lmap = velocity_map(entry.position)
        matrix += 0.5 * entry.mass * lmap.T @ lmap
    logger.debug("Built inertia from %d point masses", len(entries))
    return InertiaTensor(0.5 * (matrix + matrix.T))


def principal_axes(inertia: InertiaTensor) -> ClassicalInertia:
    """Classical 3x3 inertia about the origin, total mass and center of mass."""
    return inertia.classical()


@wrap_errors(BodyFileError, "read body file", OSError)
def _read_text(path: Path) -> str:
    return path.read_text(encoding="utf-8")


def parse_body(text: str, source: str = "<body>") -> list[PointMass]:
    """Parse `mass x y z` lines; `#` starts a comment.

    Raises:
        BodyFileError: With the line number of the first bad line.
    """
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 4:
            raise BodyFileError(f"{source}:{lineno}: expected 'mass x y z', got {line!r}")
        try:
            mass, x, y, z = (float(f) for f in fields)
        except ValueError as e:
            raise BodyFileError(f"{source}:{lineno}: {e}") from e
        if mass <= 0.0:
            raise BodyFileError(f"{source}:{lineno}: mass must be positive, got {mass}")
        entries.append(PointMass(mass, (x, y, z)))
    if not entries:
        raise BodyFileError(f"{source}: no point masses")
    return entries


def load_body(path: str | Path) -> list[PointMass]:
    """Read a body description file."""
    path = Path(path)
    masses = parse_body(_read_text(path), source=str(path))
    logger.info("Loaded %d point masses from %s", len(masses), path)
    return masses

