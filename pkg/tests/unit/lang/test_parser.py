"""Tests for the tokenizer, parser and canonical printer."""

import pytest

from pga_kit.lang import (
    Assign,
    Binary,
    Blade,
    Call,
    Name,
    Number,
    PGASyntaxError,
    Unary,
    parse,
    parse_program,
    to_source,
    tokenize,
)


def kinds(src):
    return [token.kind for token in tokenize(src)]


class TestTokenize:
    """Tests for token kinds and positions."""

    def test_blade_names(self):
        assert kinds("e12 E0 I x1") == ["BLADE", "BLADE", "BLADE", "NAME", "EOF"]

    def test_exponent_belongs_to_number(self):
        tokens = tokenize("2e1")
        assert tokens[0].kind == "NUMBER"
        assert float(tokens[0].text) == 20.0
        assert len(tokens) == 2

    def test_leading_dot_number(self):
        assert tokenize(".5")[0].text == ".5"

    def test_positions(self):
        tokens = tokenize("a +\n  e1")
        assert (tokens[2].line, tokens[2].column) == (2, 3)

    def test_comments_are_skipped(self):
        assert kinds("1 # two\n3") == ["NUMBER", "NUMBER", "EOF"]

    def test_unexpected_character(self):
        with pytest.raises(PGASyntaxError) as excinfo:
            tokenize("1 + $")
        assert excinfo.value.line == 1
        assert excinfo.value.column == 5
        assert "unexpected character '$'" in str(excinfo.value)


class TestPrecedence:
    """Binding strength through the canonical printer."""

    @pytest.mark.parametrize(
        "src,canonical",
        [
            ("a + b & c ^ d | e * f", "(a + (b & (c ^ (d | (e * f)))))"),
            ("a * b | c", "((a * b) | c)"),
            ("a ^ b & c", "((a ^ b) & c)"),
            ("a - b - c", "((a - b) - c)"),
            ("-a * b", "((-a) * b)"),
            ("~!a", "(~(!a))"),
            ("(a + b) * c", "((a + b) * c)"),
            ("2 * e1", "(2.0 * e1)"),
        ],
    )
    def test_canonical_form(self, src, canonical):
        assert to_source(parse(src)) == canonical

    def test_juxtaposition_is_geometric_product(self):
        assert parse("a b") == Binary("*", Name("a"), Name("b"))
        assert to_source(parse("e1 e2 e0")) == "((e1 * e2) * e0)"

    def test_juxtaposition_binds_like_star(self):
        assert parse("a b + c") == parse("a * b + c")

    def test_number_juxtaposition_is_rejected(self):
        with pytest.raises(PGASyntaxError, match="unexpected 'a'"):
            parse("2 a")


class TestStatements:
    def test_assignment(self):
        assert parse("x = e1 + 1") == Assign("x", Binary("+", Blade("e1"), Number(1.0)))

    def test_chained_assignment(self):
        assert parse("a = b = 2") == Assign("a", Assign("b", Number(2.0)))

    def test_cannot_assign_to_blade(self):
        with pytest.raises(PGASyntaxError, match="cannot assign to blade 'e1'"):
            parse("e1 = 2")

    def test_calls(self):
        assert parse("f()") == Call("f", ())
        assert parse("point(1, -2)") == Call("point", (Number(1.0), Unary("-", Number(2.0))))

    def test_program(self):
        statements = parse_program("a = 1; ; b = a * 2;")
        assert [to_source(s) for s in statements] == ["a = 1.0", "b = (a * 2.0)"]


class TestErrors:
    """Tests for located syntax errors."""

    def test_empty_expression(self):
        with pytest.raises(PGASyntaxError, match="empty expression"):
            parse("   ")

    def test_unclosed_paren(self):
        with pytest.raises(PGASyntaxError, match="end of input"):
            parse("(1 + 2")

    def test_trailing_tokens(self):
        with pytest.raises(PGASyntaxError, match=r"unexpected '\)'"):
            parse("1 + 2)")

    def test_unknown_blade_in_algebra(self, d201):
        with pytest.raises(PGASyntaxError) as excinfo:
            parse("1 +\n e3", d201)
        assert (excinfo.value.line, excinfo.value.column) == (2, 2)
        assert "e3" in excinfo.value.message

    def test_blades_unchecked_without_algebra(self):
        assert parse("e3") == Blade("e3")

    def test_dangling_operator(self):
        with pytest.raises(PGASyntaxError, match="end of input"):
            parse("a ^")
