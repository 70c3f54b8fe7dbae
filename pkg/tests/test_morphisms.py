import random
from fractions import Fraction

import pytest

from quantmat.minors import b_family, b_generator, quantum_determinant
from quantmat.morphisms import (GeneratorImages, TorusAutoParams, alev_chamarie,
                                alev_chamarie_inverse, check_homomorphism, decompose,
                                identity_map, torus_auto, torus_params_of, transpose_iso,
                                unit_multiple)
from quantmat.pbw import MatElement, Shape
from quantmat.scalars import ONE, Q, QLaurent


def Y(s, i, a):
    return MatElement.gen(s, i, a)


def test_identity_and_swap():
    s = Shape(1, 2)
    assert check_homomorphism(identity_map(s))
    swap = GeneratorImages(s, s, {(1, 1): Y(s, 1, 2), (1, 2): Y(s, 1, 1)})
    assert not check_homomorphism(swap)


def test_missing_image_rejected():
    s = Shape(1, 2)
    with pytest.raises(ValueError):
        GeneratorImages(s, s, {(1, 1): Y(s, 1, 1)})


def test_params_canonical_form():
    p = TorusAutoParams.make([2, Q], [Fraction(1, 3), Q.inverse(), 5])
    assert p.hp[-1] == ONE
    assert p.scalar(2, 1) == Q * Fraction(1, 3)
    assert TorusAutoParams.make([10, Q * 5], [Fraction(1, 15), Q.inverse() * Fraction(1, 5), 1]) == p
    with pytest.raises(ValueError):
        TorusAutoParams.make([0], [1])
    with pytest.raises(ValueError):
        TorusAutoParams.make([ONE + Q], [1])


def test_torus_laws_random():
    s = Shape(3, 2)
    rng = random.Random(4)
    unit = lambda: QLaurent.q(rng.randint(-3, 3), rng.choice([1, -2, Fraction(1, 7)]))
    for _ in range(20):
        p1 = TorusAutoParams.make([unit() for _ in range(3)], [unit() for _ in range(2)])
        p2 = TorusAutoParams.make([unit() for _ in range(3)], [unit() for _ in range(2)])
        f1, f2 = torus_auto(s, p1), torus_auto(s, p2)
        assert check_homomorphism(f1)
        assert torus_params_of(f1.compose(f2)) == p1 * p2
        assert torus_params_of(f1) == p1
        for b in b_family(s):
            c = unit_multiple(f1(b), b)
            assert c is not None and c.is_unit()


def test_non_diagonal_map_has_no_params():
    assert torus_params_of(alev_chamarie(1, 1, 1, 1)) is None


@pytest.mark.parametrize("m,n", [(1, 3), (2, 2), (2, 3), (3, 3)])
def test_transpose(m, n):
    t = transpose_iso(Shape(m, n))
    assert check_homomorphism(t)
    assert transpose_iso(Shape(n, m)).compose(t).is_identity()


def test_transpose_fixes_det():
    for n in (2, 3):
        assert transpose_iso(Shape(n, n))(quantum_determinant(n)) == quantum_determinant(n)


@pytest.mark.parametrize("params", [
    (1, 1, 1, 1), (2, Q, Fraction(-1, 3), Q * 4), (1, 1, 1, 0), (Q.inverse(), -1, 3, Fraction(2, 9)),
])
def test_alev_chamarie(params):
    s = Shape(1, 3)
    f, g = alev_chamarie(*params), alev_chamarie_inverse(*params)
    assert check_homomorphism(f) and check_homomorphism(g)
    assert f.compose(g).is_identity() and g.compose(f).is_identity()
    b1, b2, b3 = (b_generator(s, i) for i in (1, 2, 3))
    coeffs = decompose(f.images[(1, 2)], [b2, b1 * b3])
    assert coeffs is not None and coeffs[0].is_unit()
    lam = QLaurent.coerce(params[3])
    assert coeffs[1].is_zero() == lam.is_zero()


def test_alev_chamarie_example_coefficients():
    s = Shape(1, 3)
    b1, b2, b3 = (b_generator(s, i) for i in (1, 2, 3))
    assert decompose(alev_chamarie(1, 1, 1, 1).images[(1, 2)], [b2, b1 * b3]) == [ONE, Q]


def test_decompose_rejects_overlap():
    s = Shape(1, 2)
    with pytest.raises(ValueError):
        decompose(Y(s, 1, 1), [Y(s, 1, 1), Y(s, 1, 1) + Y(s, 1, 2)])
    assert decompose(Y(s, 1, 1), [Y(s, 1, 2)]) is None
