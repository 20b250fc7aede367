"""Shared CLI helpers for context management and argument parsing."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any, Sequence

import click

from ..algebra.multivector import Multivector
from ..algebra.signature import Signature, SignatureError
from ..lang.evaluator import Evaluator
from ..models.entity import classify_entity

if TYPE_CHECKING:
    from click import Context

    from ..config import Config
    from ..geometry.catalog import FormulaSpec


def get_config(ctx: "Context") -> "Config":
    """Get the loaded configuration from the click context."""
    return ctx.obj["config"]


def get_signature(ctx: "Context", sig_option: str | None = None) -> Signature:
    """Resolve the algebra: command option, then group option, then config.

    Raises:
        click.UsageError: If the name is not a known signature.
    """
    name = sig_option or ctx.obj.get("sig") or get_config(ctx).algebra.signature
    try:
        return Signature.parse(name)
    except SignatureError as e:
        raise click.UsageError(str(e)) from e


def make_evaluator(ctx: "Context", sig: Signature) -> Evaluator:
    """Get or create the evaluator for `sig`, cached on the context."""
    cache: dict[str, Evaluator] = ctx.obj.setdefault("evaluators", {})
    if sig.name not in cache:
        cache[sig.name] = Evaluator(sig)
    return cache[sig.name]


def parse_triplet(value: str, label: str = "value") -> tuple[float, float, float]:
    """Parse "x,y,z" into three floats.

    Raises:
        click.BadParameter: If the text is not three comma-separated numbers.
    """
    parts = [part.strip() for part in value.split(",")]
    if len(parts) != 3:
        message = f"expected three comma-separated numbers, got {value!r}"
        raise click.BadParameter(message, param_hint=label)
    try:
        x, y, z = (float(part) for part in parts)
    except ValueError as e:
        raise click.BadParameter(f"non-numeric entry in {value!r}", param_hint=label) from e
    return x, y, z


def parse_formula_args(
    spec: "FormulaSpec", args: Sequence[str], evaluator: Evaluator
) -> list[Multivector | float]:
    """Evaluate each argument as an expression; `number` slots become floats.

    Raises:
        PGASyntaxError: If an argument does not parse.
        EvaluationError: If an argument does not evaluate.
        click.BadParameter: If a `number` slot is not a scalar.
    """
    values: list[Multivector | float] = []
    for i, text in enumerate(args):
        value = evaluator.evaluate_source(text)
        kind = spec.arg_kinds[min(i, spec.arity - 1)] if spec.arity else "element"
        if kind == "number":
            values.append(_as_number(value, text))
        else:
            values.append(value)
    return values


def _as_number(value: Multivector, text: str) -> float:
    if not value.is_scalar(1e-12 * max(value.max_abs(), 1.0)):
        raise click.BadParameter(f"{text!r} is not a number")
    return value.scalar


def describe(value: Any) -> str:
    """Short type label used by `:vars` in the REPL: the entity tag, else the grades."""
    if isinstance(value, Multivector):
        if value.sig.is_euclidean_pga and value.sig.dimension in (2, 3):
            return classify_entity(value).tag
        grades = value.grades()
        if not grades:
            return "zero"
        return "grade " + "+".join(str(g) for g in grades)
    return type(value).__name__
