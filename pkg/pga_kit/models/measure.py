"""Result record for the angle and distance formulas."""

from dataclasses import dataclass
from typing import Literal

MeasureCase = Literal["euclidean", "parallel", "ideal", "intersecting"]


@dataclass(frozen=True)
class Measure:
    """A scalar answer plus the branch of the formula that produced it.

    Parallel or ideal inputs are reported through `case` rather than NaN so
    callers can tell a genuine zero from a fallback.
    """

    value: float
    case: MeasureCase  # which branch fired

    @property
    def is_fallback(self) -> bool:
        return self.case in ("parallel", "ideal")

    def __float__(self) -> float:
        return self.value
