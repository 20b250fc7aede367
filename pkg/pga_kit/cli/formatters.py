"""CLI output formatters.

Every value printed by `pga eval`, `pga repl` and `pga formula` goes through
`format_value`, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Any, Sequence

import click
from rich.console import Console
from rich.table import Table

from ..algebra.cayley import CayleyTable, CellMismatch, format_table_text
from ..algebra.multivector import Multivector
from ..algebra.text import DEFAULT_DIGITS, to_text
from ..algebra.text import format_number as _format_real
from ..geometry.dual import DualNumber
from ..geometry.motors import Motor
from ..models.entity import GeometricEntity
from ..models.measure import Measure


def format_number(value: float, digits: int = DEFAULT_DIGITS) -> str:
    """10 significant digits by default, `-0` printed as `0`, infinities as `inf`."""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return _format_real(value, digits)


def format_multivector(
    mv: Multivector, digits: int = DEFAULT_DIGITS, zero_tol: float = 0.0
) -> str:
    return to_text(mv, digits=digits, zero_tol=zero_tol)


def format_measure(measure: Measure, digits: int = DEFAULT_DIGITS) -> str:
    """Value followed by the formula branch when it is a fallback."""
    text = format_number(measure.value, digits)
    return f"{text} ({measure.case})" if measure.is_fallback else text


def format_value(value: Any, digits: int = DEFAULT_DIGITS, zero_tol: float = 0.0) -> str:
    """Render any library result: multivectors, motors, measures, records and tuples."""
    if isinstance(value, Multivector):
        return format_multivector(value, digits, zero_tol)
    if isinstance(value, Motor):
        return format_multivector(value.mv, digits, zero_tol)
    if isinstance(value, Measure):
        return format_measure(value, digits)
    if isinstance(value, GeometricEntity):
        return f"{value.tag}: {format_multivector(value.mv, digits, zero_tol)}"
    if isinstance(value, DualNumber):
        return f"{format_number(value.s, digits)} + {format_number(value.p, digits)}*I"
    if isinstance(value, bool) or value is None:
        return str(value)
    if isinstance(value, (int, float)):
        return format_number(float(value), digits)
    if isinstance(value, (tuple, list)):
        return "\n".join(format_value(item, digits, zero_tol) for item in value)
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        lines = []
        for f in dataclasses.fields(value):
            rendered = format_value(getattr(value, f.name), digits, zero_tol)
            lines.append(f"{f.name}: {rendered}")
        return "\n".join(lines)
    return str(value)


def format_cayley_table(table: CayleyTable) -> str:
    """Plain aligned grid, the same layout as the golden files."""
    return format_table_text(table)


def render_cayley_table(table: CayleyTable, console: Console | None = None) -> None:
    """Print the table with rich, labelling rows and columns by basis element."""
    grid = Table(title=f"Geometric product in {table.sig.name}", show_lines=False)
    grid.add_column("", style="bold")
    for token in table.header:
        grid.add_column(token, justify="right")
    for label, row in zip(table.header, table.rows):
        grid.add_row(label, *(_styled(cell) for cell in row))
    (console or Console()).print(grid)


def _styled(cell: str) -> str:
    if cell == "0":
        return "[dim]0[/dim]"
    if cell.startswith("-"):
        return f"[red]{cell}[/red]"
    return cell


def format_mismatches(mismatches: Sequence[CellMismatch]) -> list[str]:
    return [
        f"  {m.row} * {m.col}: expected {m.expected}, got {m.actual}" for m in mismatches
    ]


def echo_success(message: str) -> None:
    """Echo a success message in green."""
    click.echo(click.style(f"✓ {message}", fg="green"))


def echo_error(message: str) -> None:
    """Echo an error message in red."""
    click.echo(click.style(f"✗ {message}", fg="red"), err=True)


def echo_warning(message: str) -> None:
    """Echo a warning message in yellow."""
    click.echo(click.style(f"⚠ {message}", fg="yellow"))


def echo_header(message: str) -> None:
    """Echo a header with underline."""
    click.echo(f"\n{message}")
    click.echo("=" * len(message))
