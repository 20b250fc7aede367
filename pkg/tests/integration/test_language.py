"""End-to-end checks of the expression language."""

import numpy as np
import pytest
from click.testing import CliRunner

from pga_kit.cli import format_value
from pga_kit.lang import (
    Assign,
    Binary,
    Blade,
    Call,
    Evaluator,
    Name,
    Number,
    Unary,
    parse,
    to_source,
)
from pga_kit.main import main

from ..fixtures.factories import make_rng

ROUND_TRIPS = 50

NAMES = ("a", "b", "p1", "motor")
BLADES = ("e0", "e1", "e2", "e12", "e012", "E0", "E2", "I")
FUNCTIONS = ("norm", "grade", "sandwich", "exp")


def random_expr(rng: np.random.Generator, depth: int):
    """Random parse tree; numbers are non-negative since `-` is a unary node."""
    if depth == 0 or rng.random() < 0.25:
        leaf = rng.integers(3)
        if leaf == 0:
            return Number(float(rng.integers(0, 400)) / 8.0)
        if leaf == 1:
            return Name(str(rng.choice(NAMES)))
        return Blade(str(rng.choice(BLADES)))
    kind = rng.integers(3)
    if kind == 0:
        return Unary(str(rng.choice(list("-~!"))), random_expr(rng, depth - 1))
    if kind == 1:
        op = str(rng.choice(list("+-*^&|")))
        return Binary(op, random_expr(rng, depth - 1), random_expr(rng, depth - 1))
    args = tuple(random_expr(rng, depth - 1) for _ in range(rng.integers(0, 3)))
    return Call(str(rng.choice(FUNCTIONS)), args)


class TestRoundTrip:
    def test_parse_inverts_to_source(self):
        rng = make_rng()
        for _ in range(ROUND_TRIPS):
            tree = random_expr(rng, depth=4)
            if rng.random() < 0.2:
                tree = Assign("x", tree)
            assert parse(to_source(tree)) == tree

    @pytest.mark.parametrize(
        "src",
        ["a b c", "-a ^ ~b & !c", "point(1, 2) & point(3, 4) | e0", "x = y = 2 * e1 e2"],
    )
    def test_canonical_form_is_stable(self, src):
        canonical = to_source(parse(src))
        assert to_source(parse(canonical)) == canonical


class TestReplMatchesLibrary:
    """The REPL prints exactly what the library computes."""

    LINES = [
        "a = point(1, 2)",
        "b = point(4, 6)",
        "l = a & b",
        "l ^ line(0, 1, 0)",
        "exp(0.25 * e12) * e1 * ~exp(0.25 * e12)",
        "inorm(a - b)",
        "norm(a)",
    ]

    def test_same_text(self, isolated_env, d201):
        result = CliRunner().invoke(main, ["repl", "--sig", "d201"], input="\n".join(self.LINES))
        assert result.exit_code == 0

        evaluator = Evaluator(d201)
        expected = [format_value(evaluator.evaluate_source(line), 10, 1e-12) for line in self.LINES]
        assert result.output.splitlines() == "\n".join(expected).splitlines()
