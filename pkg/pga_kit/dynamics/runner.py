"""Batch simulation of body files, one process per body."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from ..geometry.motors import Motor
from ..geometry.primitives import D301
from ..models.body import BodyState
from .inertia import build_inertia, load_body
from .integrator import energy_drift, integrate, space_momentum_drift, write_trajectory_csv
from .kinematics import Vector3, bivector_from_coords, body_velocity_from_classical

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimulationJob:
    """Everything one run needs; plain data so it pickles across processes."""

    body: Path
    dt: float
    steps: int
    omega: Vector3 = (0.0, 0.0, 0.0)
    velocity: Vector3 = (0.0, 0.0, 0.0)
    force: tuple[float, ...] | None = None  # body-frame bivector coordinates
    out: Path | None = None
    renormalize: bool = True
    progress: bool = False


@dataclass(frozen=True)
class SimulationSummary:
    body: Path
    steps: int
    final_time: float
    initial_energy: float
    final_energy: float
    energy_drift_rel: float
    momentum_drift: float
    work: float
    out: Path | None = field(default=None)

    def line(self) -> str:
        """One-line report printed by `pga simulate`."""
        parts = [
            f"{self.body}:",
            f"steps={self.steps}",
            f"t={self.final_time:g}",
            f"energy={self.final_energy:.10g}",
            f"energy_drift_rel={self.energy_drift_rel:.3e}",
            f"momentum_drift={self.momentum_drift:.3e}",
        ]
        if self.work != 0.0:
            parts.append(f"work={self.work:.10g}")
        if self.out is not None:
            parts.append(f"-> {self.out}")
        return " ".join(parts)


def initial_state(job: SimulationJob) -> BodyState:
    """Identity pose with the classical angular and linear velocity of the job."""
    inertia = build_inertia(load_body(job.body))
    omega = body_velocity_from_classical(job.omega, job.velocity)
    return BodyState(Motor.identity(D301), omega, inertia)


def run_simulation(job: SimulationJob) -> SimulationSummary:
    """Integrate one body and write its trajectory when `job.out` is set."""
    state = initial_state(job)
    force = bivector_from_coords(list(job.force)) if job.force is not None else None
    trajectory = integrate(
        state, force, job.dt, job.steps, progress=job.progress, renormalize=job.renormalize
    )
    if job.out is not None:
        write_trajectory_csv(job.out, trajectory)
    return SimulationSummary(
        body=job.body,
        steps=job.steps,
        final_time=trajectory.final.t,
        initial_energy=trajectory.initial.energy,
        final_energy=trajectory.final.energy,
        energy_drift_rel=energy_drift(trajectory),
        momentum_drift=space_momentum_drift(trajectory),
        work=trajectory.final.work,
        out=job.out,
    )


def run_simulations(
    jobs: Sequence[SimulationJob], max_workers: int | None = None
) -> list[SimulationSummary]:
    """Run jobs in input order; several jobs go to a process pool."""
    if len(jobs) <= 1:
        return [run_simulation(job) for job in jobs]
    logger.info("Running %d simulations in parallel", len(jobs))
    with ProcessPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(run_simulation, jobs))
