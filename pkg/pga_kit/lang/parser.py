"""Precedence-climbing parser for the expression language.

Binding, loosest to tightest:

    name = expr
    + -
    &          join
    ^          wedge (meet)
    |          inner
    * and juxtaposition
    - ~ !      unary
    atoms      numbers, names, blades, calls, parentheses

All binary operators are left-associative. Juxtaposition `a b` is a
geometric product and is only recognised directly after a name or blade.
"""

from __future__ import annotations

import logging

from ..algebra.blades import UnknownBladeError, parse_blade
from ..algebra.signature import Signature
from .lexer import PGASyntaxError, Token, tokenize
from .nodes import Assign, Binary, Blade, Call, Expr, Name, Number, Unary

logger = logging.getLogger(__name__)

BINARY_LEVELS: tuple[frozenset[str], ...] = (
    frozenset("+-"),
    frozenset("&"),
    frozenset("^"),
    frozenset("|"),
    frozenset("*"),
)
UNARY_OPS = frozenset("-~!")


class Parser:
    """Parses one token stream; blades are validated when `sig` is given."""

    def __init__(self, src: str, sig: Signature | None = None):
        self.tokens = tokenize(src)
        self.pos = 0
        self.sig = sig

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def _advance(self) -> Token:
        token = self.current
        if token.kind != "EOF":
            self.pos += 1
        return token

    def _error(self, message: str, token: Token | None = None) -> PGASyntaxError:
        token = token or self.current
        return PGASyntaxError(message, token.line, token.column)

    def _expect(self, kind: str, text: str | None = None) -> Token:
        token = self.current
        if token.kind != kind or (text is not None and token.text != text):
            wanted = text or kind.lower()
            found = token.text or "end of input"
            raise self._error(f"expected {wanted!r}, found {found!r}")
        return self._advance()

    def _is_op(self, ops: frozenset[str]) -> bool:
        return self.current.kind == "OP" and self.current.text in ops

    def parse_program(self) -> list[Expr]:
        """Statements separated by `;`. Empty statements are skipped."""
        statements: list[Expr] = []
        while self.current.kind != "EOF":
            if self.current.kind == "SEMI":
                self._advance()
                continue
            statements.append(self.parse_statement())
            if self.current.kind not in ("SEMI", "EOF"):
                raise self._error(f"unexpected {self.current.text!r}")
        return statements

    def parse_statement(self) -> Expr:
        token, following = self.current, self._peek()
        if token.kind in ("NAME", "BLADE") and following.kind == "OP" and following.text == "=":
            if token.kind == "BLADE":
                raise self._error(f"cannot assign to blade {token.text!r}")
            self._advance()
            self._advance()
            return Assign(token.text, self.parse_statement())
        return self.parse_binary(0)

    def parse_binary(self, level: int) -> Expr:
        if level == len(BINARY_LEVELS):
            return self.parse_unary()
        ops = BINARY_LEVELS[level]
        left = self.parse_binary(level + 1)
        if "*" in ops:
            return self._parse_product(left)
        while self._is_op(ops):
            op = self._advance().text
            right = self.parse_binary(level + 1)
            left = Binary(op, left, right)
        return left

    def _after_atom_name(self) -> bool:
        return self.pos > 0 and self.tokens[self.pos - 1].kind in ("NAME", "BLADE")

    def _parse_product(self, left: Expr) -> Expr:
        while True:
            if self._is_op(frozenset("*")):
                self._advance()
            elif not (self._after_atom_name() and self.current.kind in ("NAME", "BLADE")):
                return left
            left = Binary("*", left, self.parse_unary())

    def parse_unary(self) -> Expr:
        if self._is_op(UNARY_OPS):
            op = self._advance().text
            return Unary(op, self.parse_unary())
        return self.parse_atom()

    def parse_atom(self) -> Expr:
        token = self.current
        if token.kind == "NUMBER":
            self._advance()
            return Number(float(token.text))
        if token.kind == "BLADE":
            self._advance()
            self._check_blade(token)
            return Blade(token.text)
        if token.kind == "NAME":
            self._advance()
            if self.current.kind == "LPAREN":
                return Call(token.text, self._parse_args())
            return Name(token.text)
        if token.kind == "LPAREN":
            self._advance()
            inner = self.parse_binary(0)
            self._expect("RPAREN")
            return inner
        found = token.text or "end of input"
        raise self._error(f"unexpected {found!r}")

    def _parse_args(self) -> tuple[Expr, ...]:
        self._expect("LPAREN")
        args: list[Expr] = []
        if self.current.kind != "RPAREN":
            args.append(self.parse_binary(0))
            while self.current.kind == "COMMA":
                self._advance()
                args.append(self.parse_binary(0))
        self._expect("RPAREN")
        return tuple(args)

    def _check_blade(self, token: Token) -> None:
        if self.sig is None:
            return
        try:
            parse_blade(token.text, self.sig)
        except UnknownBladeError as e:
            raise PGASyntaxError(str(e), token.line, token.column) from e


def parse(src: str, sig: Signature | None = None) -> Expr:
    """Parse exactly one statement.

    Raises:
        PGASyntaxError: On lexical errors, malformed input or unknown blades.
    """
    parser = Parser(src, sig)
    if parser.current.kind == "EOF":
        raise parser._error("empty expression")
    tree = parser.parse_statement()
    if parser.current.kind != "EOF":
        raise parser._error(f"unexpected {parser.current.text!r}")
    logger.debug("Parsed %r as %s", src, tree)
    return tree


def parse_program(src: str, sig: Signature | None = None) -> list[Expr]:
    """Parse `;`-separated statements."""
    return Parser(src, sig).parse_program()
