from fractions import Fraction
from math import gcd

import pytest

from quantmat.minors import b_family, b_generator, commutation_exponent, quantum_determinant
from quantmat.pbw import MatElement, Shape, q_normal_check
from quantmat.polyparse import parse_poly
from quantmat.scalars import Q
from quantmat.spectrum import (PolyV, build_u, dim_ker_B, height_one_catalog, is_primitive,
                               spectrum_report, stratum_dim)
from quantmat.torus import v2


def test_stratum_dim_examples():
    assert stratum_dim(2, 3) == 0
    assert stratum_dim(2, 2) == 2
    assert stratum_dim(2, 6) == 2
    assert stratum_dim(1, 1) == 1


def test_primitivity_examples():
    assert is_primitive(2, 3) is True
    assert is_primitive(2, 2) is False
    assert is_primitive(4, 6) is True
    assert is_primitive(1, 1, "rank") is False
    with pytest.raises(ValueError):
        is_primitive(2, 3, "guess")


def test_dim_ker_examples():
    assert dim_ker_B(1, 3) == 1
    assert dim_ker_B(2, 2) == 2
    assert dim_ker_B(3, 5) == 1


@pytest.mark.parametrize("m", range(1, 9))
def test_dim_ker_methods_agree_both_orientations(m):
    for n in range(1, 9):
        want = 0 if v2(m) != v2(n) else gcd(m, n)
        for method in ("rank", "closed-form", "intermediate"):
            assert dim_ker_B(m, n, method) == want, (m, n, method)


def test_report():
    rep = spectrum_report(2, 2)
    assert rep.as_dict() == {"m": 2, "n": 2, "v2m": 1, "v2n": 1, "d": 2, "m_prime": 1,
                             "n_prime": 1, "alpha": 2, "primitive": False, "methods_agree": True}
    rep = spectrum_report(2, 3)
    assert rep.primitive and rep.d is None


def test_catalog():
    c = height_one_catalog(2, 3)
    assert c.complete and len(c.generators) == 4
    c = height_one_catalog(2, 2)
    assert not c.complete and c.d == 2 and len(c.generators) == 3
    c = height_one_catalog(1, 2)
    s = Shape(1, 2)
    assert c.complete
    assert c.generators == [MatElement.gen(s, 1, 2), MatElement.gen(s, 1, 1)]


@pytest.mark.parametrize("c", [1, -2, Fraction(3, 5)])
def test_u_row_vector(c):
    s = Shape(1, 3)
    Y = lambda a: MatElement.gen(s, 1, a)
    u = build_u(1, 3, parse_poly(f"X1 + ({c})", 1))
    b1, b2, b3 = (b_generator(s, i) for i in (1, 2, 3))
    assert u == b1 * b3 + b2.scale(c)
    assert u == (Y(1) * Y(3)).scale(Q.inverse()) + Y(2).scale(c)


@pytest.mark.parametrize("c", [1, 5, Fraction(-1, 2)])
def test_u_is_det_shift(c):
    s = Shape(2, 2)
    assert build_u(2, 2, parse_poly(f"X2 - ({c})", 2)) == quantum_determinant(2) - MatElement.scalar(s, c)


BATTERY = [
    (1, 3, "X1 + 1"), (1, 3, "X1^2 + X1 + 1"), (2, 2, "X2 - 1"), (2, 2, "X1*X2 - 1"),
    (2, 2, "X1 + X2 + 1"), (1, 5, "X1 + 2"), (3, 3, "X3 - 2"), (3, 3, "X1 + X2*X3 + 1"),
]


@pytest.mark.parametrize("m,n,text", BATTERY)
def test_u_is_normal_and_q_commutes_with_b(m, n, text):
    u = build_u(m, n, parse_poly(text, gcd(m, n)))
    assert q_normal_check(u) is not None
    for b in b_family(Shape(m, n)):
        assert commutation_exponent(u, b) is not None


def test_u_errors():
    with pytest.raises(ValueError, match="X1"):
        build_u(1, 3, parse_poly("X1", 1))
    with pytest.raises(ValueError):
        build_u(2, 3, parse_poly("X1 + 1", 1))
    with pytest.raises(ValueError):
        build_u(2, 2, parse_poly("X1 + 1", 1))
    with pytest.raises(ValueError):
        build_u(2, 2, parse_poly("3", 2))
    with pytest.raises(ValueError):
        build_u(2, 2, parse_poly("X1*X2 + X2", 2))


def test_polyv_queries():
    V = parse_poly("X1^2*X2 + X2", 2)
    assert V.degree_in(0) == 2 and V.degree_in(1) == 1
    assert V.divisible_by_variable() == 1
    assert not V.is_constant()
    assert PolyV(2, {(0, 0): 3}).is_constant()
