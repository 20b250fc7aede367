"""Tokenizer for the expression language.

Identifiers spelled like blades (`e012`, `E0`, `I`) become BLADE tokens;
whether the blade exists in the active algebra is checked by the parser.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal

from ..algebra.blades import is_blade_token
from ..errors import PGAError

TokenKind = Literal["NUMBER", "NAME", "BLADE", "OP", "LPAREN", "RPAREN", "COMMA", "SEMI", "EOF"]

OPERATORS = frozenset("+-*^&|~!=")

_NUMBER = re.compile(r"(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_PUNCT: dict[str, TokenKind] = {"(": "LPAREN", ")": "RPAREN", ",": "COMMA", ";": "SEMI"}


class PGASyntaxError(PGAError):
    """Lexical or grammatical error, located by 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int


def tokenize(src: str) -> list[Token]:
    """Split source text into tokens, ending with an EOF token."""
    tokens: list[Token] = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(src):
        ch = src[pos]
        column = pos - line_start + 1
        if ch == "\n":
            pos += 1
            line, line_start = line + 1, pos
            continue
        if ch.isspace():
            pos += 1
            continue
        if ch == "#":
            while pos < len(src) and src[pos] != "\n":
                pos += 1
            continue
        if ch.isdigit() or (ch == "." and pos + 1 < len(src) and src[pos + 1].isdigit()):
            match = _NUMBER.match(src, pos)
            assert match is not None
            tokens.append(Token("NUMBER", match.group(0), line, column))
            pos = match.end()
            continue
        match = _IDENT.match(src, pos)
        if match:
            text = match.group(0)
            kind: TokenKind = "BLADE" if is_blade_token(text) else "NAME"
            tokens.append(Token(kind, text, line, column))
            pos = match.end()
            continue
        if ch in OPERATORS:
            tokens.append(Token("OP", ch, line, column))
            pos += 1
            continue
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, line, column))
            pos += 1
            continue
        raise PGASyntaxError(f"unexpected character {ch!r}", line, column)
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens
