"""Rigid-body inertia, kinematics and the RK4 integrator."""

from .inertia import (
    BodyFileError,
    ClassicalInertia,
    InertiaTensor,
    InvalidBodyError,
    PointMass,
    SingularInertiaError,
    build_inertia,
    load_body,
    parse_body,
    principal_axes,
)
from .integrator import (
    IntegrationError,
    TrajectoryFileError,
    energy_drift,
    euler_rhs,
    integrate,
    kinetic_energy,
    rk4_step,
    space_momentum_drift,
    work_done,
    write_trajectory_csv,
)
from .kinematics import (
    BIVECTOR_BASIS,
    bivector_coords,
    bivector_from_coords,
    body_velocity_from_classical,
    classical_velocity,
)
from .runner import SimulationJob, SimulationSummary, run_simulation, run_simulations

__all__ = [
    "BIVECTOR_BASIS",
    "BodyFileError",
    "ClassicalInertia",
    "InertiaTensor",
    "IntegrationError",
    "InvalidBodyError",
    "PointMass",
    "SimulationJob",
    "SimulationSummary",
    "SingularInertiaError",
    "TrajectoryFileError",
    "bivector_coords",
    "bivector_from_coords",
    "body_velocity_from_classical",
    "build_inertia",
    "classical_velocity",
    "energy_drift",
    "euler_rhs",
    "integrate",
    "kinetic_energy",
    "load_body",
    "parse_body",
    "principal_axes",
    "rk4_step",
    "run_simulation",
    "run_simulations",
    "space_momentum_drift",
    "work_done",
    "write_trajectory_csv",
]
