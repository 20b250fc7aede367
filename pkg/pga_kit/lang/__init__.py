"""Expression language: lexer, parser, canonical printer and evaluator."""

from .evaluator import FUNCTION_NAMES, EvaluationError, Evaluator
from .lexer import PGASyntaxError, Token, tokenize
from .nodes import Assign, Binary, Blade, Call, Expr, Name, Number, Unary
from .parser import parse, parse_program
from .printer import to_source

__all__ = [
    "FUNCTION_NAMES",
    "Assign",
    "Binary",
    "Blade",
    "Call",
    "EvaluationError",
    "Evaluator",
    "Expr",
    "Name",
    "Number",
    "PGASyntaxError",
    "Token",
    "Unary",
    "parse",
    "parse_program",
    "to_source",
    "tokenize",
]
