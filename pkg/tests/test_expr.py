"""Tests for the expression language."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tests.strategies import exprs
from vague_membership.errors import ConstructionError, ExprSyntaxError
from vague_membership.expr import (
    And,
    Atom,
    Bot,
    Neg,
    Or,
    Top,
    as_expr,
    atoms_of,
    fold_expr,
    format_expr,
    parse,
)

a, b, c = Atom("a"), Atom("b"), Atom("c")


class TestParse:
    """Tests for parse."""

    def test_atom(self):
        assert parse("short") == Atom("short")

    def test_constants(self):
        assert parse("bot") == Bot()
        assert parse("top") == Top()

    def test_negation_binds_tightest(self):
        assert parse("!a & b") == And(Neg(a), b)

    def test_and_binds_tighter_than_or(self):
        assert parse("a | b & c") == Or(a, And(b, c))

    def test_left_associative(self):
        assert parse("a & b & c") == And(And(a, b), c)
        assert parse("a | b | c") == Or(Or(a, b), c)

    def test_parentheses(self):
        assert parse("(a | b) & c") == And(Or(a, b), c)

    def test_not_keyword(self):
        assert parse("not not a") == Neg(Neg(a))

    def test_keyword_prefix_is_a_name(self):
        """Names that merely start with a keyword stay names."""
        assert parse("notable & topmost") == And(Atom("notable"), Atom("topmost"))

    def test_whitespace_ignored(self):
        assert parse("  ( medium|tall )\n") == Or(Atom("medium"), Atom("tall"))

    def test_underscored_names(self):
        assert parse("b0_40 | b40_80") == Or(Atom("b0_40"), Atom("b40_80"))


class TestSyntaxErrors:
    """Tests for ExprSyntaxError reporting."""

    def test_missing_operand(self):
        with pytest.raises(ExprSyntaxError) as exc_info:
            parse("short &")
        err = exc_info.value
        assert err.position == len("short &")
        assert "name" in err.expected
        assert "end of input" in str(err)

    def test_doubled_operator(self):
        with pytest.raises(ExprSyntaxError) as exc_info:
            parse("a & & b")
        assert exc_info.value.position == 4
        assert exc_info.value.found == "'&'"

    def test_bad_character(self):
        with pytest.raises(ExprSyntaxError) as exc_info:
            parse("a $ b")
        assert exc_info.value.position == 2
        assert "position 2" in str(exc_info.value)

    def test_unbalanced(self):
        with pytest.raises(ExprSyntaxError):
            parse("(a | b")

    def test_empty(self):
        with pytest.raises(ExprSyntaxError) as exc_info:
            parse("")
        assert exc_info.value.position == 0

    def test_is_value_error(self):
        with pytest.raises(ValueError):
            parse("a b")


class TestAtoms:
    """Tests for Atom and atoms_of."""

    @pytest.mark.parametrize("name", ["", "1st", "not", "top", "a-b"])
    def test_invalid_names(self, name):
        with pytest.raises(ConstructionError):
            Atom(name)

    def test_atoms_of(self):
        assert atoms_of(parse("!short | medium & short | top")) == {"short", "medium"}
        assert atoms_of(Bot()) == set()


class TestFormat:
    """Tests for format_expr."""

    @pytest.mark.parametrize(
        "text",
        [
            "a & b | c",
            "a & (b | c)",
            "!(a | b)",
            "!!a",
            "a | (b | c)",
            "a & b & c",
            "bot | !top",
        ],
    )
    def test_canonical_text_is_stable(self, text):
        assert format_expr(parse(text)) == text

    def test_drops_redundant_parentheses(self):
        assert format_expr(parse("((a) & (b)) | (c)")) == "a & b | c"

    def test_str(self):
        assert str(And(Neg(a), Or(b, c))) == "!a & (b | c)"

    @settings(max_examples=200)
    @given(e=exprs({"short", "medium", "tall"}))
    def test_format_parses_back(self, e):
        assert parse(format_expr(e)) == e

    def test_as_expr(self):
        assert as_expr("a") == a
        assert as_expr(a) is a


TOKENS = ["a", "b", "bot", "top", "not", "!", "&", "|", "(", ")"]


class TestRandomInput:
    """Random token streams either parse or raise ExprSyntaxError."""

    @settings(max_examples=300)
    @given(tokens=st.lists(st.sampled_from(TOKENS), max_size=15))
    def test_token_streams(self, tokens):
        text = " ".join(tokens)
        try:
            e = parse(text)
        except ExprSyntaxError as err:
            assert 0 <= err.position <= len(text)
        else:
            assert parse(format_expr(e)) == e

    @settings(max_examples=300)
    @given(text=st.text(alphabet="ab!&|() $~", max_size=20))
    def test_raw_text(self, text):
        try:
            parse(text)
        except ExprSyntaxError as err:
            assert 0 <= err.position <= len(text)


class TestDeepExpressions:
    """Walks over very deep trees do not hit the recursion limit."""

    def test_long_conjunction(self):
        text = " & ".join(["a"] * 3000)
        e = parse(text)
        assert format_expr(e) == text
        assert parse(format_expr(e)) == e
        assert atoms_of(e) == {"a"}
        assert hash(e) == hash(parse(text))

    def test_deep_negation(self):
        text = "!" * 3001 + "a"
        e = parse(text)
        assert format_expr(e) == text
        assert e != parse("!" * 3000 + "a")

    def test_nested_parentheses(self):
        assert parse("(" * 2000 + "a" + ")" * 2000) == a

    def test_right_nested_disjunction(self):
        e = b
        for _ in range(2500):
            e = Or(a, e)
        assert parse(format_expr(e)) == e


class TestFoldAndEquality:
    """Tests for fold_expr and structural equality."""

    def test_fold_counts_nodes(self):
        size = fold_expr(parse("!a & (b | top)"), lambda node, vs: 1 + sum(vs))
        assert size == 6

    def test_fold_sees_operands_in_order(self):
        text = fold_expr(
            parse("a | b & c"),
            lambda node, vs: node.name if isinstance(node, Atom) else "".join(vs),
        )
        assert text == "abc"

    def test_structural_equality(self):
        assert And(a, b) == And(Atom("a"), Atom("b"))
        assert And(a, b) != Or(a, b)
        assert And(a, b) != And(b, a)
        assert Bot() != Top()
        assert Neg(a) != a

    def test_atom_named_like_a_node(self):
        assert Or(Atom("And"), a) != Or(And(a, a), a)

    def test_usable_as_keys(self):
        assert {parse("a & b"): 1}[And(a, b)] == 1
