"""Result records and tagged views for pga-kit."""

from .body import BodyState, Trajectory, TrajectorySample
from .entity import GeometricEntity, classify_entity
from .measure import Measure

__all__ = [
    "BodyState",
    "GeometricEntity",
    "Measure",
    "Trajectory",
    "TrajectorySample",
    "classify_entity",
]
