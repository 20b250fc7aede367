"""Signed-blade multiplication tables and golden-table verification.

For three generators the table is laid out over the named basis
1, e0, e1, e2, E0, E1, E2, I used by the reference tables for P(R_(3,0,0))
and P(R*_(2,0,1)). Other signatures use canonical blade names.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from importlib import resources

from .blades import blade_name, blade_product, parse_blade
from .signature import Signature
from .text import blade_order

logger = logging.getLogger(__name__)

NAMED_BASIS_3 = ("1", "e0", "e1", "e2", "E0", "E1", "E2", "I")

GOLDEN_TABLES = {"r300": "r300.txt", "d201": "d201.txt"}


@dataclass(frozen=True)
class CayleyTable:
    """Geometric product table as signed tokens (`0`, `1`, `-e0`, `E2`, ...)."""

    sig: Signature
    header: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def cell(self, row: str, col: str) -> str:
        return self.rows[self.header.index(row)][self.header.index(col)]


@dataclass(frozen=True)
class CellMismatch:
    """One cell where a generated table disagrees with its golden copy."""

    row: str
    col: str
    expected: str
    actual: str


def table_basis(sig: Signature) -> tuple[str, ...]:
    """Header tokens for a signature's table."""
    if sig.n_generators == 3:
        return NAMED_BASIS_3
    return tuple(blade_name(bits) for bits in blade_order(sig.size))


def cayley_table(sig: Signature) -> CayleyTable:
    """Full blade-by-blade product table of the algebra, as signed tokens."""
    header = table_basis(sig)
    resolved = [parse_blade(token, sig) for token in header]
    by_bits = {bits: (sign, token) for token, (sign, bits) in zip(header, resolved)}

    rows = []
    for sign_a, bits_a in resolved:
        row = []
        for sign_b, bits_b in resolved:
            sign, bits = blade_product(bits_a, bits_b, sig.metric)
            sign *= sign_a * sign_b
            if sign == 0:
                row.append("0")
                continue
            header_sign, token = by_bits[bits]
            # the header element carries its own sign relative to the canonical blade
            sign *= header_sign
            row.append(token if sign > 0 else f"-{token}")
        rows.append(tuple(row))
    return CayleyTable(sig=sig, header=header, rows=tuple(rows))


def parse_table_text(text: str) -> list[list[str]]:
    """Grid of whitespace-separated tokens; `#` starts a comment."""
    grid = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            grid.append(line.split())
    return grid


def format_table_text(table: CayleyTable) -> str:
    """Plain-text grid with aligned columns, the golden-file layout."""
    width = max(len(token) for row in table.rows for token in row)
    return "\n".join(" ".join(token.rjust(width) for token in row) for row in table.rows)


def load_golden(name: str) -> list[list[str]]:
    """Load an embedded golden table by signature shorthand.

    Raises:
        KeyError: If no golden table ships for that signature.
    """
    filename = GOLDEN_TABLES[name]
    text = resources.files("pga_kit.algebra").joinpath("goldens", filename).read_text()
    return parse_table_text(text)


def compare_with_golden(table: CayleyTable, golden: list[list[str]]) -> list[CellMismatch]:
    """Cells where `table` differs from `golden`, including shape mismatches."""
    mismatches = []
    size = len(table.header)
    for i in range(size):
        for j in range(size):
            try:
                expected = golden[i][j]
            except IndexError:
                expected = "<missing>"
            actual = table.rows[i][j]
            if expected != actual:
                mismatches.append(CellMismatch(table.header[i], table.header[j], expected, actual))
    logger.info("Golden check for %s: %d mismatching cells", table.sig.name, len(mismatches))
    return mismatches


def verify_golden(sig: Signature) -> list[CellMismatch] | None:
    """Compare a signature's table with its golden copy; None if no golden exists."""
    if sig.name not in GOLDEN_TABLES:
        return None
    return compare_with_golden(cayley_table(sig), load_golden(sig.name))
