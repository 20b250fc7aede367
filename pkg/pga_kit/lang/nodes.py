"""Parse-tree nodes. All nodes are immutable and compare by value."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Blade:
    token: str


@dataclass(frozen=True)
class Unary:
    """`-x`, `~x` (reverse) or `!x` (dual)."""

    op: str
    operand: Expr


@dataclass(frozen=True)
class Binary:
    """`+ -`, `*` geometric, `^` wedge, `&` join, `|` inner."""

    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple[Expr, ...]


@dataclass(frozen=True)
class Assign:
    name: str
    value: Expr


Expr = Union[Number, Name, Blade, Unary, Binary, Call, Assign]
