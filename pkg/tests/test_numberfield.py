import random
from fractions import Fraction

import numpy as np
import pytest

from novikov.exact import (
    AlgebraicReal,
    IntPoly,
    Matrix,
    NumberField,
    nf_rank,
)


def field_sqrt2():
    gen = AlgebraicReal.from_poly(IntPoly((-2, 0, 1)), Fraction(1), Fraction(2))
    return NumberField(gen)


def field_rho():
    gen = AlgebraicReal.from_poly(IntPoly((-1, -1, 0, 1)), Fraction(1), Fraction(2))
    return NumberField(gen)


def test_basic_arithmetic():
    nf = field_sqrt2()
    x = nf.gen()
    two = nf.scalar(2)
    assert (x * x - two).is_zero()
    assert (x + (-x)).is_zero()
    assert (nf.one() * x - x).is_zero()
    assert ((x + nf.one()) * (x - nf.one()) - (x * x - nf.one())).is_zero()


def test_reduce():
    nf = field_rho()
    # x^3 reduces to x + 1
    cube = nf.reduce([Fraction(0), Fraction(0), Fraction(0), Fraction(1)])
    assert cube.rep == (Fraction(1), Fraction(1), Fraction(0))


def test_inverse():
    nf = field_rho()
    x = nf.gen()
    for elem in (x, x * x, x + nf.one(), x * x - nf.scalar(3) * x + nf.one()):
        prod = elem * elem.inverse()
        assert (prod - nf.one()).is_zero()
    with pytest.raises(ZeroDivisionError):
        nf.zero().inverse()


def test_division():
    nf = field_sqrt2()
    x = nf.gen()
    assert ((x / x) - nf.one()).is_zero()
    half_x = x / nf.scalar(2)
    assert (half_x + half_x - x).is_zero()


def test_degree_one_field():
    nf = NumberField(AlgebraicReal.from_rational(Fraction(3, 2)))
    g = nf.gen()
    assert g.rep == (Fraction(3, 2),)
    assert (g * g.inverse() - nf.one()).is_zero()


def test_to_float():
    nf = field_sqrt2()
    x = nf.gen()
    val = (x * x + x).to_float()
    assert abs(val - (2 + 2 ** 0.5)) < 1e-9


def test_nf_rank_known():
    nf = field_rho()
    x = nf.gen()
    one, zero = nf.one(), nf.zero()
    ident = Matrix(3, 3, [one if i == j else zero for i in range(3) for j in range(3)])
    assert nf_rank(ident) == 3
    # row 2 = x * row 1: rank 1
    m = Matrix(2, 2, [one, x, x, x * x])
    assert nf_rank(m) == 1
    assert nf_rank(Matrix(2, 2, [zero] * 4)) == 0


def test_nf_rank_against_float_svd():
    """Exact rank vs numpy's float rank on 100 random matrices over Q(sqrt2).

    Entries are small integer combinations a + b*sqrt2; with entries this tame
    a 1e-9 singular-value cutoff is a faithful oracle.
    """
    nf = field_sqrt2()
    x = nf.gen()
    rng = random.Random(99)
    s2 = 2 ** 0.5
    for _ in range(100):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        elems, floats = [], []
        for _ in range(rows * cols):
            a, b = rng.randint(-3, 3), rng.randint(-3, 3)
            elems.append(nf.scalar(a) + nf.scalar(b) * x)
            floats.append(a + b * s2)
        exact = nf_rank(Matrix(rows, cols, elems))
        approx = np.linalg.matrix_rank(
            np.array(floats).reshape(rows, cols), tol=1e-9)
        assert exact == approx
