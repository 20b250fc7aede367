"""Tests for CLI helper functions."""

import math

import click
import pytest

from pga_kit.algebra import Multivector
from pga_kit.cli.helpers import (
    describe,
    get_config,
    get_signature,
    make_evaluator,
    parse_formula_args,
    parse_triplet,
)
from pga_kit.config import Config
from pga_kit.geometry import get_formula, point2


@pytest.fixture
def ctx():
    """Click context carrying a default config, as the `main` group builds it."""
    return click.Context(click.Command("pga"), obj={"config": Config(), "sig": None})


class TestContext:
    def test_get_config(self, ctx):
        assert isinstance(get_config(ctx), Config)

    def test_signature_from_config(self, ctx):
        assert get_signature(ctx).name == "d201"

    def test_group_option_beats_config(self, ctx):
        ctx.obj["sig"] = "r300"
        assert get_signature(ctx).name == "r300"

    def test_command_option_beats_group(self, ctx):
        ctx.obj["sig"] = "r300"
        assert get_signature(ctx, "d301").name == "d301"

    def test_unknown_signature(self, ctx):
        with pytest.raises(click.UsageError, match="Unknown signature"):
            get_signature(ctx, "x9")

    def test_evaluator_is_cached_per_algebra(self, ctx, d201, d301):
        first = make_evaluator(ctx, d201)
        assert make_evaluator(ctx, d201) is first
        assert make_evaluator(ctx, d301) is not first


class TestParseTriplet:
    """Tests for parse_triplet."""

    def test_valid(self):
        assert parse_triplet("1, 2.5,-3") == (1.0, 2.5, -3.0)

    def test_wrong_count(self):
        with pytest.raises(click.BadParameter, match="three comma-separated"):
            parse_triplet("1,2", "--omega")

    def test_non_numeric(self):
        with pytest.raises(click.BadParameter, match="non-numeric"):
            parse_triplet("1,two,3")


class TestParseFormulaArgs:
    """Tests for evaluating formula arguments."""

    def test_number_slots_become_floats(self, ctx, d201):
        spec = get_formula("d201", "rotor-about-point")
        values = parse_formula_args(spec, ["point(1, 1)", "pi"], make_evaluator(ctx, d201))
        assert values[0].allclose(point2(1.0, 1.0))
        assert values[1] == pytest.approx(math.pi)

    def test_number_slot_rejects_elements(self, ctx, d201):
        spec = get_formula("d201", "rotor-about-point")
        with pytest.raises(click.BadParameter, match="not a number"):
            parse_formula_args(spec, ["point(1, 1)", "e1"], make_evaluator(ctx, d201))

    def test_variadic_elements(self, ctx, d201):
        spec = get_formula("d201", "loop-length")
        values = parse_formula_args(spec, ["point(0,0)"] * 4, make_evaluator(ctx, d201))
        assert len(values) == 4
        assert all(isinstance(v, Multivector) for v in values)


class TestDescribe:
    def test_entity_tag(self):
        assert describe(point2(1.0, 2.0)) == "point"

    def test_grades_outside_euclidean_pga(self, r300):
        x = Multivector.from_blades(r300, {"1": 1.0, "e12": 2.0})
        assert describe(x) == "grade 0+2"
        assert describe(Multivector.zero(r300)) == "zero"

    def test_other_values(self):
        assert describe(3.5) == "float"
