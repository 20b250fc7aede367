"""Rigid-body state and trajectory records.

A state is the body-to-space motor `g`, the body-frame velocity bivector
Omega_c and the body's inertia. Momenta, space quantities and the kinetic
energy are derived on demand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterator

from ..algebra.multivector import Multivector
from ..geometry.motors import Motor

if TYPE_CHECKING:
    from ..dynamics.inertia import InertiaTensor


@dataclass(frozen=True)
class BodyState:
    """Pose, body velocity and inertia of one rigid body."""

    g: Motor
    omega: Multivector
    inertia: InertiaTensor

    @property
    def momentum_body(self) -> Multivector:
        """Pi_c = J^-1(A(Omega_c))."""
        return self.inertia.momentum(self.omega)

    @property
    def momentum_space(self) -> Multivector:
        """Pi_s = g Pi_c g~, constant under free motion."""
        return self.g.apply(self.momentum_body)

    @property
    def velocity_space(self) -> Multivector:
        return self.g.apply(self.omega)

    @property
    def energy(self) -> float:
        """Pseudoscalar weight of Omega_c ^ Pi_c."""
        return self.omega.wedge(self.momentum_body).pseudoscalar


@dataclass(frozen=True)
class TrajectorySample:
    """One integration step: time, state and the work done since t = 0."""

    t: float
    state: BodyState
    work: float = 0.0

    @property
    def energy(self) -> float:
        return self.state.energy


@dataclass
class Trajectory:
    """Samples of one integration run, starting with the initial state."""

    samples: list[TrajectorySample] = field(default_factory=list)

    def append(self, sample: TrajectorySample) -> None:
        self.samples.append(sample)

    @property
    def initial(self) -> TrajectorySample:
        return self.samples[0]

    @property
    def final(self) -> TrajectorySample:
        return self.samples[-1]

    @property
    def times(self) -> list[float]:
        return [s.t for s in self.samples]

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self) -> Iterator[TrajectorySample]:
        return iter(self.samples)

    def __getitem__(self, index: int) -> TrajectorySample:
        return self.samples[index]
