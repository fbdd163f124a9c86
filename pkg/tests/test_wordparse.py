"""Grammar round-trips and error locations."""

import pytest

from centex.errors import WordSyntaxError
from centex.wordparse import (
    Comm,
    Conj,
    Name,
    One,
    Power,
    Seq,
    flatten,
    parse_word,
    print_word,
)


class TestParse:
    def test_comm_expands(self):
        tree = parse_word("comm(a,b)")
        assert tree == Comm(Name("a"), Name("b"))
        assert flatten(tree) == (("a", -1), ("b", -1), ("a", 1), ("b", 1))

    def test_conj_power(self):
        tree = parse_word("conj(p, a)^2")
        assert tree == Power(Conj(Name("p"), Name("a")), 2)
        assert flatten(tree) == (("a", -1), ("p", 2), ("a", 1))

    def test_dangling_caret(self):
        with pytest.raises(WordSyntaxError) as err:
            parse_word("a^")
        assert err.value.column == 3

    def test_identity(self):
        assert flatten(parse_word("1")) == ()

    def test_powers_bind_to_single_atom(self):
        assert flatten(parse_word("a b^2")) == (("a", 1), ("b", 2))
        assert flatten(parse_word("(a b)^2")) == (
            ("a", 1),
            ("b", 1),
            ("a", 1),
            ("b", 1),
        )

    def test_negative_and_zero_powers(self):
        assert flatten(parse_word("a^-3")) == (("a", -3),)
        assert flatten(parse_word("b^0")) == ()

    def test_multichar_names(self):
        assert flatten(parse_word("t1 ab")) == (("t1", 1), ("ab", 1))

    def test_reserved_requires_call(self):
        with pytest.raises(WordSyntaxError):
            parse_word("comm")

    def test_error_location_reports_line(self):
        with pytest.raises(WordSyntaxError) as err:
            parse_word("a\nb $")
        assert err.value.line == 2

    def test_garbage_number(self):
        with pytest.raises(WordSyntaxError):
            parse_word("a 2")

    def test_unbalanced(self):
        with pytest.raises(WordSyntaxError):
            parse_word("(a b")


class TestRoundTrip:
    @pytest.mark.parametrize(
        "text",
        [
            "a",
            "a b^-1",
            "comm(a, b)",
            "conj(p, a)^2",
            "(a b)^3 c^-2",
            "comm(conj(a, b), c)",
            "1",
            "t1^-1 t2 a",
        ],
    )
    def test_parse_print_parse(self, text):
        tree = parse_word(text)
        printed = print_word(tree)
        assert parse_word(printed) == tree
        assert print_word(parse_word(printed)) == printed
