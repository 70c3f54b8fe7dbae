from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quantmat.polyparse import ParseError, format_poly, parse_poly
from quantmat.spectrum import PolyV


def test_basic_parse():
    V = parse_poly("2*X1^2*X2 - X1*X2 + 3/4", 2)
    assert V.terms == {(2, 1): 2, (1, 1): -1, (0, 0): Fraction(3, 4)}
    assert format_poly(V) == "2*X1^2*X2 - X1*X2 + 3/4"


def test_expansion_and_whitespace():
    assert parse_poly("(X1+1)^2", 1) == parse_poly("X1^2 + 2*X1 + 1", 1)
    assert parse_poly("  X1 *X2", 2) == parse_poly("X1*X2", 2)
    assert parse_poly("-(X1 - 1)", 1) == parse_poly("1 - X1", 1)
    assert parse_poly("X1 - X1 + 2", 1).is_constant()


def test_variable_count_inferred():
    assert parse_poly("X3 + 1").d == 3


@pytest.mark.parametrize("text,pos", [
    ("X1 +", 4), ("(X1", 3), ("X3", 0), ("X1^-1", 3), ("2 $ X1", 2), ("", 0),
])
def test_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_poly(text, 2)
    assert exc.value.pos == pos
    assert f"position {pos}" in str(exc.value)


polys = st.integers(1, 3).flatmap(lambda d: st.dictionaries(
    st.tuples(*[st.integers(0, 3)] * d),
    st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(bool),
    min_size=1, max_size=5).map(lambda t: PolyV(d, t)))


@given(polys)
def test_format_then_parse_round_trips(V):
    text = format_poly(V)
    W = parse_poly(text, V.d)
    assert W == V
    assert format_poly(W) == text
