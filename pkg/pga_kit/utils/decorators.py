"""Decorators for translating foreign exceptions into pga-kit errors."""

import functools
import logging
from typing import Callable, Type, TypeVar

F = TypeVar("F", bound=Callable)

logger = logging.getLogger(__name__)


def wrap_errors(
    error_class: Type[Exception],
    operation: str,
    source_exception: Type[Exception] | tuple[Type[Exception], ...] | None = None,
) -> Callable[[F], F]:
    """Decorator to re-raise failures of a function as one error type.

    Args:
        error_class: The exception class to wrap errors in (e.g., SingularInertiaError).
        operation: Description of the operation for error messages (e.g., "invert inertia").
        source_exception: Exception class (or tuple) to wrap. When omitted, any
            exception that is not already an `error_class` is wrapped.

    Returns:
        Decorated function that catches and wraps exceptions.

    Example:
        @wrap_errors(SingularInertiaError, "invert inertia", np.linalg.LinAlgError)
        def velocity(self, momentum: Multivector) -> Multivector:
            ...
    """
    catch = source_exception or Exception

    def decorator(func: F) -> F:
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except catch as e:
                if isinstance(e, error_class):
                    raise
                logger.debug("Wrapping %s from %s", type(e).__name__, func.__name__)
                raise error_class(f"Failed to {operation}: {e}") from e

        return wrapper  # type: ignore

    return decorator
