"""Base exception shared by every pga-kit module.

Concrete errors live next to the code that raises them; the CLI only needs
this base to tell library failures apart from bugs.
"""


class PGAError(Exception):
    """Base class for all pga-kit errors."""

    pass


class NotInvertibleError(PGAError, ArithmeticError):
    """Raised when a dual number, AD number or versor has no inverse."""

    pass
