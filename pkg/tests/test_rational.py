from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from allocgrid.exceptions import RationalFormatError
from allocgrid.utils.rational import format_rational, parse_rational


@pytest.mark.parametrize(
    "text, expected",
    [
        ("2/3", Fraction(2, 3)),
        ("6/10", Fraction(3, 5)),
        ("0.6", Fraction(3, 5)),
        (" 7/3 ", Fraction(7, 3)),
        ("5", Fraction(5)),
        ("-1/2", Fraction(-1, 2)),
        (".25", Fraction(1, 4)),
    ],
)
def test_parse_accepts_fractions_and_decimals(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "abc", "1/0", "2/-3", "1e-3", "1/2/3", "0x10"])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(RationalFormatError):
        parse_rational(text)


def test_parse_rejects_floats():
    with pytest.raises(RationalFormatError):
        parse_rational(0.6)


def test_format_is_always_a_over_b():
    assert format_rational(Fraction(220, 243)) == "220/243"
    assert format_rational(Fraction(1)) == "1/1"


@given(st.fractions())
def test_formatted_values_parse_back(value):
    assert parse_rational(format_rational(value)) == value
