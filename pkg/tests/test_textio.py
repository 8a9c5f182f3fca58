from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinorga.algebra import Multivector, Signature
from spinorga.errors import GAError, ParseError
from spinorga.textio import (
    MAX_DEPTH,
    ParsedExpression,
    blade_name,
    format_number,
    load_fixtures,
    parse,
    parse_expression,
    serialize,
)

from .conftest import random_mv

FIXTURES = Path(__file__).parent / "fixtures"
CL2 = Signature(2, 0)
CL3 = Signature(3, 0)
CL10 = Signature(10, 0)


class TestParse:
    def test_sum(self):
        a = parse("1 + 2e12", CL2)
        assert a.coeffs.tolist() == [1.0, 0.0, 0.0, 2.0]

    def test_sign_folded(self):
        assert parse("e21", CL2) == -Multivector.blade(CL2, 1, 2)

    def test_brace_form(self):
        a = parse("3e{1,10}", CL10)
        assert a[(1 << 0) | (1 << 9)] == 3.0
        assert np.count_nonzero(a.coeffs) == 1

    def test_whitespace_and_products(self):
        assert parse("  2 *e1\t*e2 ", CL2) == parse("2e12", CL2)
        assert parse("e1 ^ e2", CL2) == parse("e12", CL2)
        assert parse("-(1 - e1)", CL2) == parse("e1 - 1", CL2)

    def test_merge_duplicates(self):
        p = parse_expression("e1 + 2 + e1 - 2", CL2)
        assert p.terms == ((2.0, 1),)
        assert p.to_multivector() == parse("2e1", CL2)
        assert ParsedExpression.from_multivector(Multivector.zero(CL2)).terms == ()

    def test_exponent(self):
        assert parse("1.5E2", CL2).scalar_part == 150.0
        assert parse("2E-1e1", CL2)[1] == 0.2
        assert parse(".5", CL2).scalar_part == 0.5

    @pytest.mark.parametrize(
        "text,offset",
        [("", 0), ("1 +", 3), ("e3", 1), ("2 + e1 $", 7), ("e{1,", 4), ("(1 + e1", 7), ("1e", 1),
         ("e{1;2}", 3), ("1..2", 2), ("é1", 0), ("1 + é", 4)],
    )
    def test_errors_have_offsets(self, text, offset):
        with pytest.raises(ParseError) as info:
            parse(text, CL2)
        assert info.value.offset == offset

    def test_bytes(self):
        assert parse(b"e1 + e2", CL2) == parse("e1 + e2", CL2)
        with pytest.raises(ParseError) as info:
            parse(b"e1 + \xff", CL2)
        assert info.value.offset == 5

    def test_depth_limit(self):
        ok = "(" * (MAX_DEPTH - 1) + "1" + ")" * (MAX_DEPTH - 1)
        assert parse(ok, CL2).scalar_part == 1.0
        with pytest.raises(ParseError):
            parse("(" * (MAX_DEPTH + 1) + "1" + ")" * (MAX_DEPTH + 1), CL2)
        with pytest.raises(ParseError):
            parse("-" * 10000 + "1", CL2)

    def test_overflow(self):
        with pytest.raises(ParseError):
            parse("1E400", CL2)

    def test_not_a_string(self):
        with pytest.raises(GAError):
            parse(12, CL2)


class TestSerialize:
    def test_examples(self):
        assert serialize(Multivector.zero(CL2)) == "0"
        assert serialize(parse("1 + e12", CL2)) == "1 + e12"
        assert serialize(parse("-e1 - 2.5e2", CL2)) == "-e1 - 2.5e2"

    def test_names(self):
        assert blade_name(0b101) == "e13"
        assert blade_name((1 << 0) | (1 << 9)) == "e{1,10}"
        assert format_number(3.0) == "3"
        assert format_number(1e-20) == "1E-20"

    def test_random_round_trip(self, rng):
        for sig in (CL2, CL3, Signature(1, 3), CL10):
            for _ in range(50):
                a = random_mv(rng, sig)
                assert parse(serialize(a), sig) == a

    @settings(max_examples=200)
    @given(st.lists(st.floats(allow_nan=False, allow_infinity=False, width=64), min_size=8, max_size=8))
    def test_round_trip_any_float(self, xs):
        a = Multivector(CL3, xs)
        assert parse(serialize(a), CL3) == a


class TestFixtures:
    def test_expressions(self):
        fixtures = load_fixtures(FIXTURES / "expressions.txt")
        assert len(fixtures) > 20
        for fx in fixtures:
            got = serialize(parse(fx.expr, fx.sig))
            assert got == fx.expected, f"line {fx.line}: {fx.expr}"

    def test_bad_fixture_line(self, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("2,0;e1\n")
        with pytest.raises(GAError):
            load_fixtures(p)


@settings(max_examples=300)
@given(st.binary(max_size=40))
def test_fuzz_bytes(data):
    try:
        parse(data, CL3)
    except ParseError:
        pass


@settings(max_examples=300)
@given(st.text(alphabet="e0123456789{},.+-*^() E", max_size=30))
def test_fuzz_grammar_alphabet(text):
    try:
        a = parse(text, CL10)
    except ParseError:
        return
    assert a.sig == CL10
