"""Euclidean and ideal norms, normalization of k-vectors and motors."""

from __future__ import annotations

import functools
import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Literal, TypeVar

from ..algebra.multivector import Multivector
from ..errors import NotInvertibleError, PGAError
from .dual import DualNumber, dual_scale

logger = logging.getLogger(__name__)

IDEAL_THRESHOLD = 1e-10

NormKind = Literal["euclidean", "ideal"]

F = TypeVar("F", bound=Callable[..., Any])


class IdealElementError(PGAError, ValueError):
    """Raised when a euclidean norm is requested for an ideal element (use ideal_norm)."""

    pass


class EuclideanElementError(PGAError, ValueError):
    """Raised when an ideal norm is requested for a euclidean element."""

    pass


class NotNormalizedError(PGAError, ValueError):
    """Raised when an operation requires a normalized argument."""

    pass


@dataclass(frozen=True)
class Norm:
    """A norm value tagged with the norm that produced it.

    Ideal norms of lines and pseudoscalars are signed numerical values;
    euclidean norms are never negative.
    """

    kind: NormKind
    value: float


def _square_scalar(x: Multivector) -> float:
    return (x * x).scalar


def is_ideal(x: Multivector, tol: float = IDEAL_THRESHOLD) -> bool:
    """True when |x^2| <= tol * (max |coeff|)^2.

    The zero element counts as ideal.
    """
    scale = x.max_abs()
    return abs(_square_scalar(x)) <= tol * scale * scale


def euclidean_norm(x: Multivector, tol: float = IDEAL_THRESHOLD) -> float:
    """sqrt(|x^2|) of a euclidean simple k-vector.

    Raises:
        IdealElementError: If x squares to zero.
    """
    if is_ideal(x, tol):
        raise IdealElementError(f"{x} is ideal; use ideal_norm")
    return math.sqrt(abs(_square_scalar(x)))


def ideal_norm(x: Multivector, signed: bool = True, tol: float = IDEAL_THRESHOLD) -> float:
    """Norm of an ideal element, measured as ||J(x)|| in the dual algebra.

    When J(x) has a one-dimensional coefficient space (ideal lines in 2D,
    the ideal plane in 3D, pseudoscalars) the signed numerical value is
    returned unless `signed` is False.

    Raises:
        EuclideanElementError: If x is euclidean.
    """
    if not is_ideal(x, tol):
        raise EuclideanElementError(f"{x} is euclidean; use euclidean_norm")
    image = x.dual()
    grades = image.grades(tol * max(x.max_abs(), 1.0))
    top = x.sig.n_generators - 1
    if signed and grades in ([0], [top]):
        # scalar part or the coefficient of e1...en
        key = 0 if grades == [0] else x.sig.pseudoscalar_bits ^ 1
        return float(image.coeffs[key])
    return math.sqrt(abs(_square_scalar(image)))


def norm(x: Multivector, tol: float = IDEAL_THRESHOLD) -> Norm:
    """Euclidean norm when available, otherwise the ideal norm."""
    if is_ideal(x, tol):
        return Norm("ideal", ideal_norm(x, tol=tol))
    return Norm("euclidean", euclidean_norm(x, tol))


def _is_point(x: Multivector) -> bool:
    return x.sig.is_euclidean_pga and x.grades(1e-14 * max(x.max_abs(), 1.0)) == [
        x.sig.n_generators - 1
    ]


def normalize(x: Multivector, tol: float = IDEAL_THRESHOLD) -> Multivector:
    """Scale x to unit euclidean norm, or unit ideal magnitude if x is ideal.

    Euclidean points are additionally oriented so their E0 coordinate is
    positive.

    Raises:
        NotInvertibleError: For the zero element.
    """
    if is_ideal(x, tol):
        size = ideal_norm(x, signed=False, tol=tol)
        if size == 0.0:
            raise NotInvertibleError("Cannot normalize the zero element")
        return x / size
    unit = x / euclidean_norm(x, tol)
    if _is_point(unit) and unit["E0"] < 0:
        unit = -unit
    return unit


def unit(x: Multivector, tol: float = IDEAL_THRESHOLD) -> Multivector:
    """Like `normalize` but never flips orientation."""
    if is_ideal(x, tol):
        size = ideal_norm(x, signed=False, tol=tol)
        if size == 0.0:
            raise NotInvertibleError("Cannot normalize the zero element")
        return x / size
    return x / euclidean_norm(x, tol)


def normalize_motor(m: Multivector) -> Multivector:
    """Divide an even element by the dual-number square root of m m~.

    Raises:
        NotInvertibleError: If m m~ has no positive scalar part.
    """
    d = DualNumber.of(m * m.reverse())
    return dual_scale(d.sqrt().inverse(), m)


def normalized_args(func: F) -> F:
    """Normalize every multivector argument unless called with raw=True."""

    @functools.wraps(func)
    def wrapper(*args: Any, raw: bool = False, **kwargs: Any) -> Any:
        if not raw:
            args = tuple(normalize(a) if isinstance(a, Multivector) else a for a in args)
        return func(*args, **kwargs)

    return wrapper  # type: ignore[return-value]
