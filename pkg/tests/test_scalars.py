from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from quantmat.scalars import (ONE, Q, Q_MINUS_QINV, ZERO, IntMatrix, QLaurent, QRatio,
                              format_rational, kernel_basis_integer, minor_gcd_bruteforce,
                              minor_gcd_full_rank, parse_rational, ql_proportional,
                              rank_rational, same_ratio)
from quantmat.pbw import Shape
from quantmat.torus import build_B, delta_exponent

coef = st.fractions(min_value=-5, max_value=5, max_denominator=4)
laurent = st.dictionaries(st.integers(-4, 4), coef, max_size=4).map(QLaurent)
nonzero_laurent = laurent.filter(lambda x: not x.is_zero())
unit = st.tuples(st.integers(-5, 5), coef.filter(bool)).map(lambda t: QLaurent.q(*t))


def small_matrix(max_rows=5, max_cols=6):
    return st.integers(1, max_rows).flatmap(lambda r: st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                           min_size=r, max_size=r).map(lambda rows: IntMatrix(rows, c))))


# -- rationals -----------------------------------------------------------

def test_rational_text():
    assert format_rational(Fraction(3)) == "3/1"
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert parse_rational("-4/6") == Fraction(-2, 3)
    assert parse_rational("7") == 7
    with pytest.raises(ValueError):
        parse_rational("1/x")


# -- Laurent polynomials ---------------------------------------------------

def test_q_minus_qinv():
    assert Q_MINUS_QINV == Q - Q.inverse()
    assert Q_MINUS_QINV * (Q + Q.inverse()) == QLaurent.q(2) - QLaurent.q(-2)
    assert repr(QLaurent.q(2) - QLaurent.q(-2)) == "q^2 - q^-2"


def test_zero_terms_dropped():
    assert QLaurent({3: 0, 1: 2}) == QLaurent.q(1, 2)
    assert QLaurent({0: 0}).is_zero()
    with pytest.raises(ValueError):
        ZERO.min_degree()


def test_units():
    u = QLaurent.q(-3, Fraction(2, 5))
    assert u.is_unit() and u * u.inverse() == ONE
    assert u ** -2 == (u * u).inverse()
    with pytest.raises(ZeroDivisionError):
        (ONE + Q).inverse()
    assert not ZERO.is_unit()


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO
    assert a * ONE == a


@given(laurent, st.integers(-5, 5))
def test_shift_is_multiplication_by_q_power(a, k):
    assert a.shift(k) == a * QLaurent.q(k)


@given(nonzero_laurent, nonzero_laurent, unit)
def test_proportional_recovers_scalar(p, r, u):
    ratio = ql_proportional(p * u, p)
    assert ratio is not None and ratio.den.is_one() and ratio.num == u
    c = ql_proportional(p, r)
    # cross-multiplication is the defining property
    assert c.num * r == c.den * p
    assert same_ratio(p, r, c)


def test_proportional_reduced():
    r = ql_proportional(Q - Q.inverse(), QLaurent.q(2) - QLaurent.q(-2))
    assert r == QRatio(Q, QLaurent.q(2) + ONE)
    assert ql_proportional(ZERO, ONE) is None
    assert ql_proportional(ONE, ZERO) is None
    assert ql_proportional(ZERO, ZERO) is None


# -- integer linear algebra ----------------------------------------------------

@given(small_matrix())
@settings(max_examples=60)
def test_rank_nullity_and_kernel(M):
    K = kernel_basis_integer(M)
    assert rank_rational(M) + len(K) == M.cols
    for v in K:
        assert not any(M.apply(v))
        assert gcd(*v) == 1
        assert next(x for x in v if x) > 0
    if K:
        assert rank_rational(IntMatrix([list(v) for v in K], M.cols)) == len(K)


@given(small_matrix(3, 5))
@settings(max_examples=60)
def test_minor_gcd_matches_enumeration(M):
    d = M.rows
    if rank_rational(M) < d:
        with pytest.raises(ValueError):
            minor_gcd_full_rank(M, d)
    else:
        assert minor_gcd_full_rank(M, d) == minor_gcd_bruteforce(M, d)


def test_minor_gcd_examples():
    assert minor_gcd_full_rank(IntMatrix([[2, 0], [0, 2]]), 2) == 4
    assert minor_gcd_full_rank(IntMatrix([[1, -1, 1]]), 1) == 1
    s = Shape(2, 2)
    M = IntMatrix([list(delta_exponent(s, j)) for j in (1, 2)])
    assert minor_gcd_full_rank(M, 2) == 1
    with pytest.raises(ValueError):
        minor_gcd_full_rank(M, 3)


def test_B_for_row_vector():
    B = build_B(Shape(1, 3))
    assert B.tolist() == [[0, 1, 1], [-1, 0, 1], [-1, -1, 0]]
    assert rank_rational(B) == 2
    assert kernel_basis_integer(B) == [(1, -1, 1)]


def test_matrix_arithmetic():
    A = IntMatrix([[1, 2], [3, 4]])
    assert A @ IntMatrix.identity(2) == A
    assert A ** 2 == A @ A
    assert A.transpose().tolist() == [[1, 3], [2, 4]]
    assert (A - A) == IntMatrix.zeros(2, 2)
    assert list(A.apply((1, -1))) == [-1, -1]
