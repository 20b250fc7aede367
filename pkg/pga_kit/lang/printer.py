"""Canonical source form of a parse tree.

Every compound node is fully parenthesised, so parse(to_source(t)) == t.
"""

from .nodes import Assign, Binary, Blade, Call, Expr, Name, Number, Unary


def to_source(expr: Expr) -> str:
    if isinstance(expr, Number):
        return repr(expr.value)
    if isinstance(expr, Name):
        return expr.name
    if isinstance(expr, Blade):
        return expr.token
    if isinstance(expr, Unary):
        return f"({expr.op}{to_source(expr.operand)})"
    if isinstance(expr, Binary):
        return f"({to_source(expr.left)} {expr.op} {to_source(expr.right)})"
    if isinstance(expr, Call):
        return f"{expr.func}({', '.join(to_source(arg) for arg in expr.args)})"
    if isinstance(expr, Assign):
        return f"{expr.name} = {to_source(expr.value)}"
    raise TypeError(f"Not an expression node: {expr!r}")
