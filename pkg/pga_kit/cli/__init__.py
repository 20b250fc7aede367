"""CLI module for pga-kit.

This module provides shared helpers and formatters for CLI commands.
Commands are defined in pga_kit/main.py.
"""

from .formatters import (
    echo_error,
    echo_header,
    echo_success,
    echo_warning,
    format_cayley_table,
    format_measure,
    format_mismatches,
    format_multivector,
    format_number,
    format_value,
    render_cayley_table,
)
from .helpers import (
    describe,
    get_config,
    get_signature,
    make_evaluator,
    parse_formula_args,
    parse_triplet,
)

__all__ = [
    "describe",
    "echo_error",
    "echo_header",
    "echo_success",
    "echo_warning",
    "format_cayley_table",
    "format_measure",
    "format_mismatches",
    "format_multivector",
    "format_number",
    "format_value",
    "get_config",
    "get_signature",
    "make_evaluator",
    "parse_formula_args",
    "parse_triplet",
    "render_cayley_table",
]
