"""Evaluates parse trees by delegating every operation to the library."""

from __future__ import annotations

import logging
import math
from typing import Callable, Mapping

from ..algebra.multivector import Multivector
from ..algebra.signature import Signature
from ..errors import PGAError
from ..geometry.motors import exp_bivector, log_motor, sandwich, sqrt_motor
from ..geometry.norms import euclidean_norm, ideal_norm, normalize
from ..geometry.primitives import ideal_point2, ideal_point3, line2, plane3, point2, point3
from .lexer import PGASyntaxError
from .nodes import Assign, Binary, Blade, Call, Expr, Name, Number, Unary
from .parser import parse, parse_program
from .printer import to_source

logger = logging.getLogger(__name__)

CONSTANTS: dict[str, float] = {"pi": math.pi}


class EvaluationError(PGAError):
    """Raised when a sub-expression cannot be evaluated.

    `expression` is the failing sub-expression in canonical source form.
    """

    def __init__(self, message: str, expression: str):
        super().__init__(f"{message} in {expression}")
        self.message = message
        self.expression = expression


class _ArgumentError(PGAError, ValueError):
    pass


def _scalar_arg(x: Multivector, func: str) -> float:
    if not x.is_scalar(1e-12 * max(x.max_abs(), 1.0)):
        raise _ArgumentError(f"{func} expects a scalar argument")
    return x.scalar


def _exp(x: Multivector) -> Multivector:
    if x.is_scalar():
        return Multivector.scalar_of(x.sig, math.exp(x.scalar))
    if x.grades() == [2]:
        return exp_bivector(x).mv
    raise _ArgumentError("exp expects a scalar or a bivector")


def _log(x: Multivector) -> Multivector:
    if x.is_scalar():
        return Multivector.scalar_of(x.sig, math.log(x.scalar))
    return log_motor(x)


def _sqrt(x: Multivector) -> Multivector:
    if x.is_scalar():
        return Multivector.scalar_of(x.sig, math.sqrt(x.scalar))
    return sqrt_motor(x).mv


def _grade(x: Multivector, k: Multivector) -> Multivector:
    value = _scalar_arg(k, "grade")
    if not float(value).is_integer() or value < 0:
        raise _ArgumentError(f"grade expects a non-negative integer, got {value}")
    return x.grade(int(value))


def _as_scalar(sig: Signature, value: float) -> Multivector:
    return Multivector.scalar_of(sig, value)


UNARY_FUNCTIONS: dict[str, Callable[[Multivector], Multivector]] = {
    "exp": _exp,
    "log": _log,
    "sqrt": _sqrt,
    "normalize": normalize,
    "norm": lambda x: _as_scalar(x.sig, euclidean_norm(x)),
    "inorm": lambda x: _as_scalar(x.sig, ideal_norm(x)),
    "dual": lambda x: x.dual(),
    "undual": lambda x: x.undual(),
    "rev": lambda x: x.reverse(),
}

BINARY_FUNCTIONS: dict[str, Callable[[Multivector, Multivector], Multivector]] = {
    "grade": _grade,
    "sandwich": sandwich,
}

OPERATORS: dict[str, Callable[[Multivector, Multivector], Multivector]] = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "*": lambda a, b: a.geometric(b),
    "^": lambda a, b: a.wedge(b),
    "&": lambda a, b: a.join(b),
    "|": lambda a, b: a.inner(b),
}

UNARY_OPERATORS: dict[str, Callable[[Multivector], Multivector]] = {
    "-": lambda x: -x,
    "~": lambda x: x.reverse(),
    "!": lambda x: x.dual(),
}

# Coordinate constructors keyed by (name, generator count of the algebra).
CONSTRUCTORS: dict[tuple[str, int], tuple[Callable[..., Multivector], int]] = {
    ("point", 3): (point2, 2),
    ("point", 4): (point3, 3),
    ("ideal", 3): (ideal_point2, 2),
    ("ideal", 4): (ideal_point3, 3),
    ("line", 3): (line2, 3),
    ("plane", 4): (plane3, 4),
}

FUNCTION_NAMES = tuple(
    sorted({*UNARY_FUNCTIONS, *BINARY_FUNCTIONS, *(name for name, _ in CONSTRUCTORS)})
)


class Evaluator:
    """Evaluates statements in one algebra with a mutable variable scope."""

    def __init__(self, sig: Signature, env: Mapping[str, Multivector] | None = None):
        self.sig = sig
        self.env: dict[str, Multivector] = dict(env or {})

    def set_signature(self, sig: Signature) -> None:
        """Switch algebra; variables from the old algebra are dropped."""
        self.sig = sig
        self.env.clear()

    def evaluate(self, expr: Expr) -> Multivector:
        try:
            return self._eval(expr)
        except (EvaluationError, PGASyntaxError):
            raise
        except (PGAError, ArithmeticError, ValueError) as e:
            raise EvaluationError(str(e), to_source(expr)) from e

    def evaluate_source(self, src: str) -> Multivector:
        """Parse and evaluate one statement."""
        return self.evaluate(parse(src, self.sig))

    def evaluate_program(self, src: str) -> list[Multivector]:
        return [self.evaluate(stmt) for stmt in parse_program(src, self.sig)]

    def _eval(self, expr: Expr) -> Multivector:
        if isinstance(expr, Number):
            return Multivector.scalar_of(self.sig, expr.value)
        if isinstance(expr, Blade):
            return Multivector.blade(self.sig, expr.token)
        if isinstance(expr, Name):
            return self._lookup(expr)
        if isinstance(expr, Assign):
            value = self.evaluate(expr.value)
            self.env[expr.name] = value
            return value
        if isinstance(expr, Unary):
            operand = self.evaluate(expr.operand)
            return self._wrap(expr, lambda: UNARY_OPERATORS[expr.op](operand))
        if isinstance(expr, Binary):
            left = self.evaluate(expr.left)
            right = self.evaluate(expr.right)
            return self._wrap(expr, lambda: OPERATORS[expr.op](left, right))
        if isinstance(expr, Call):
            return self._call(expr)
        raise TypeError(f"Not an expression node: {expr!r}")

    def _lookup(self, expr: Name) -> Multivector:
        if expr.name in self.env:
            return self.env[expr.name]
        if expr.name in CONSTANTS:
            return Multivector.scalar_of(self.sig, CONSTANTS[expr.name])
        raise EvaluationError(f"undefined name {expr.name!r}", to_source(expr))

    def _call(self, expr: Call) -> Multivector:
        args = [self.evaluate(arg) for arg in expr.args]
        if expr.func in UNARY_FUNCTIONS:
            func1 = UNARY_FUNCTIONS[expr.func]
            self._check_arity(expr, 1)
            return self._wrap(expr, lambda: func1(args[0]))
        if expr.func in BINARY_FUNCTIONS:
            func2 = BINARY_FUNCTIONS[expr.func]
            self._check_arity(expr, 2)
            return self._wrap(expr, lambda: func2(args[0], args[1]))
        if any(name == expr.func for name, _ in CONSTRUCTORS):
            return self._construct(expr, args)
        raise EvaluationError(f"unknown function {expr.func!r}", to_source(expr))

    def _construct(self, expr: Call, args: list[Multivector]) -> Multivector:
        """point(x, y[, z]), ideal(x, y[, z]), line(a, b, c) and plane(a, b, c, d)."""
        key = (expr.func, self.sig.n_generators)
        if key not in CONSTRUCTORS or not self.sig.is_euclidean_pga:
            message = f"{expr.func} is not available in {self.sig.name}"
            raise EvaluationError(message, to_source(expr))
        build, arity = CONSTRUCTORS[key]
        self._check_arity(expr, arity)
        try:
            coords = [_scalar_arg(arg, expr.func) for arg in args]
        except _ArgumentError as e:
            raise EvaluationError(str(e), to_source(expr)) from e
        return self._wrap(expr, lambda: build(*coords, sig=self.sig))

    @staticmethod
    def _check_arity(expr: Call, arity: int) -> None:
        if len(expr.args) != arity:
            message = f"{expr.func} takes {arity} argument(s), got {len(expr.args)}"
            raise EvaluationError(message, to_source(expr))

    @staticmethod
    def _wrap(expr: Expr, thunk: Callable[[], Multivector]) -> Multivector:
        try:
            return thunk()
        except (PGAError, ArithmeticError, ValueError) as e:
            raise EvaluationError(str(e), to_source(expr)) from e
