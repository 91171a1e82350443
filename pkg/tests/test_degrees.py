from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ftop import DegreeRangeError, as_degree, format_rational, parse_rational


def test_parse_accepts_plain_and_fraction_forms():
    assert parse_rational("0") == 0
    assert parse_rational("7") == 7
    assert parse_rational("1/2") == Fraction(1, 2)
    assert parse_rational("2/4") == Fraction(1, 2)
    assert parse_rational("-3/4") == Fraction(-3, 4)


@pytest.mark.parametrize(
    "bad", ["", "0.5", "1/0", "1/-2", "a", " 1/2", "1/2 ", "1 / 2", "+1", "1e-3"]
)
def test_parse_rejects_non_rational_literals(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_format_reduces():
    assert format_rational(Fraction(2, 4)) == "1/2"
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(0)) == "0"


def test_as_degree_coerces_exact_inputs():
    assert as_degree(1) == 1
    assert as_degree("1/3") == Fraction(1, 3)
    assert as_degree(Fraction(2, 5)) == Fraction(2, 5)


def test_as_degree_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        as_degree(0.5)
    with pytest.raises(TypeError):
        as_degree(True)


@pytest.mark.parametrize("bad", ["3/2", "-1/2", 2, -1])
def test_as_degree_rejects_out_of_range(bad):
    with pytest.raises(DegreeRangeError):
        as_degree(bad)


class TestRoundTrip:
    @given(st.integers(min_value=0, max_value=600), st.integers(min_value=1, max_value=600))
    def test_format_then_parse_is_identity(self, num, den):
        """parse(format(q)) == q for every degree."""
        value = Fraction(min(num, den), den)
        assert parse_rational(format_rational(value)) == value
