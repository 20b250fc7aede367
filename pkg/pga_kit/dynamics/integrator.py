"""Fixed-step RK4 integration of the rigid-body equations of motion.

State variables are the motor g (8 even coordinates) and the body velocity
Omega_c (6 bivector coordinates):

    g'     = g Omega_c
    Pi_c'  = Phi_c + 2 Pi_c x Omega_c
    Omega_c' = A^-1(J(Pi_c'))

The motor is renormalized after every step. With this velocity convention
the power delivered by a body-frame force Phi_c is 2 Phi_c v Omega_c.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from tqdm import tqdm

from ..algebra.multivector import Multivector
from ..algebra.tables import tables_for
from ..errors import PGAError
from ..geometry.motors import DRIFT_TOLERANCE, Motor
from ..geometry.primitives import D301
from ..models.body import BodyState, Trajectory, TrajectorySample
from ..utils.decorators import wrap_errors
from .inertia import InertiaTensor
from .kinematics import (
    BIVECTOR_BASIS,
    BIVECTOR_INDEX,
    BIVECTOR_SIGNS,
    bivector_coords,
    bivector_from_coords,
    blade_slots,
    embed_bivector,
)

logger = logging.getLogger(__name__)

MOTOR_BASIS: tuple[str, ...] = ("1", "e01", "e02", "e03", "e23", "e31", "e12", "e0123")
MOTOR_SIGNS, MOTOR_INDEX = blade_slots(MOTOR_BASIS, D301)


class IntegrationError(PGAError, ValueError):
    """Raised for invalid step sizes or step counts."""

    pass


class TrajectoryFileError(PGAError):
    """Raised when a trajectory file cannot be written."""

    pass


@dataclass(frozen=True)
class Derivative:
    """Time derivative of a state: g' and Omega_c'."""

    g: Multivector
    omega: Multivector


def _force_coords(force: Multivector | None) -> np.ndarray:
    if force is None:
        return np.zeros(len(BIVECTOR_BASIS))
    return bivector_coords(force)


def _rates(
    g: np.ndarray, w: np.ndarray, inertia: InertiaTensor, phi: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """g' and Omega_c' on dense motor coefficients and velocity coordinates."""
    product = tables_for(D301).geometric.apply
    omega = embed_bivector(w)
    momentum = embed_bivector(inertia.momentum_coords(w))
    # 2 Pi x Omega = Pi Omega - Omega Pi
    twice_cross = product(momentum, omega) - product(omega, momentum)
    momentum_rate = phi + BIVECTOR_SIGNS * twice_cross[BIVECTOR_INDEX]
    return product(g, omega), inertia.velocity_coords(momentum_rate)


def euler_rhs(state: BodyState, force: Multivector | None = None) -> Derivative:
    """Right-hand side of the motion equations at `state`."""
    g_rate, w_rate = _rates(
        state.g.mv.coeffs, bivector_coords(state.omega), state.inertia, _force_coords(force)
    )
    return Derivative(g=Multivector(state.g.sig, g_rate), omega=bivector_from_coords(w_rate))


def rk4_step(
    state: BodyState,
    force: Multivector | None,
    dt: float,
    renormalize: bool = True,
) -> BodyState:
    """One classical Runge-Kutta step of size dt.

    The stages run on coefficient arrays; only the stepped state is wrapped
    back into a motor and a bivector.
    """
    inertia = state.inertia
    phi = _force_coords(force)
    g0 = state.g.mv.coeffs
    w0 = bivector_coords(state.omega)
    g1, w1 = _rates(g0, w0, inertia, phi)
    g2, w2 = _rates(g0 + 0.5 * dt * g1, w0 + 0.5 * dt * w1, inertia, phi)
    g3, w3 = _rates(g0 + 0.5 * dt * g2, w0 + 0.5 * dt * w2, inertia, phi)
    g4, w4 = _rates(g0 + dt * g3, w0 + dt * w3, inertia, phi)
    g = g0 + (g1 + 2.0 * g2 + 2.0 * g3 + g4) * (dt / 6.0)
    w = w0 + (w1 + 2.0 * w2 + 2.0 * w3 + w4) * (dt / 6.0)
    motor = Motor(Multivector(state.g.sig, g))
    if renormalize:
        motor = motor.renormalized()
        drift = motor.drift()
        if drift > DRIFT_TOLERANCE:
            logger.warning("Motor drift %.3g after renormalization", drift)
    return BodyState(g=motor, omega=bivector_from_coords(w), inertia=inertia)


def power(state: BodyState, force: Multivector | None) -> float:
    """E' = 2 Phi_c v Omega_c."""
    if force is None:
        return 0.0
    return 2.0 * force.grade(2).join(state.omega).scalar


def integrate(
    state: BodyState,
    force: Multivector | None,
    dt: float,
    steps: int,
    progress: bool = False,
    renormalize: bool = True,
) -> Trajectory:
    """Integrate `steps` RK4 steps, recording every state and the running work.

    Raises:
        IntegrationError: If dt is not positive or steps is negative.
        SingularInertiaError: If the body cannot be given its velocity.
    """
    if not dt > 0.0:
        raise IntegrationError(f"Step size must be positive, got {dt}")
    if steps < 0:
        raise IntegrationError(f"Step count must be non-negative, got {steps}")

    logger.info("Integrating %d steps with dt=%g", steps, dt)
    trajectory = Trajectory([TrajectorySample(0.0, state, 0.0)])
    work = 0.0
    previous_power = power(state, force)
    current = state
    for i in tqdm(range(1, steps + 1), desc="Integrating", unit="step", disable=not progress):
        current = rk4_step(current, force, dt, renormalize=renormalize)
        next_power = power(current, force)
        work += 0.5 * dt * (previous_power + next_power)
        previous_power = next_power
        trajectory.append(TrajectorySample(i * dt, current, work))
    logger.info(
        "Integration finished at t=%g, energy %g -> %g",
        trajectory.final.t,
        trajectory.initial.energy,
        trajectory.final.energy,
    )
    return trajectory


def kinetic_energy(state: BodyState) -> float:
    """E from the pseudoscalar weight of Omega_c ^ Pi_c."""
    return state.energy


def work_done(trajectory: Trajectory, force: Multivector | None) -> float:
    """Trapezoid rule over 2 Phi_c v Omega_c along the recorded samples."""
    samples = trajectory.samples
    total = 0.0
    for before, after in zip(samples, samples[1:]):
        rates = power(before.state, force) + power(after.state, force)
        total += 0.5 * (after.t - before.t) * rates
    return total


def energy_drift(trajectory: Trajectory) -> float:
    """max |E(t) - E(0)| / |E(0)|, or the absolute drift when E(0) is 0."""
    initial = trajectory.initial.energy
    deviation = max(abs(sample.energy - initial) for sample in trajectory)
    return deviation / abs(initial) if initial != 0.0 else deviation


def space_momentum_drift(trajectory: Trajectory) -> float:
    """Largest componentwise change of Pi_s over the trajectory."""
    initial = bivector_coords(trajectory.initial.state.momentum_space)
    return max(
        float(np.max(np.abs(bivector_coords(sample.state.momentum_space) - initial)))
        for sample in trajectory
    )


def trajectory_row(sample: TrajectorySample) -> list[float]:
    """t, motor, velocity, energy and space momentum of one sample."""
    state = sample.state
    return [
        sample.t,
        *(MOTOR_SIGNS * state.g.mv.coeffs[MOTOR_INDEX]),
        *bivector_coords(state.omega),
        state.energy,
        *bivector_coords(state.momentum_space),
    ]


def trajectory_header() -> list[str]:
    return [
        "t",
        *(f"g_{token}" for token in MOTOR_BASIS),
        *(f"omega_{token}" for token in BIVECTOR_BASIS),
        "energy",
        *(f"pi_{token}" for token in BIVECTOR_BASIS),
    ]


@wrap_errors(TrajectoryFileError, "write trajectory", OSError)
def write_trajectory_csv(path: str | Path, trajectory: Trajectory) -> Path:
    """One CSV row per sample with a header row."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(trajectory_header())
        for sample in trajectory:
            writer.writerow([repr(float(value)) for value in trajectory_row(sample)])
    logger.info("Wrote %d trajectory rows to %s", len(trajectory), path)
    return path
