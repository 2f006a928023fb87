import math
import random
from fractions import Fraction

import pytest

from novikov.exact import (
    AlgebraicReal,
    IntPoly,
    alg_cmp,
    alg_eq,
    alg_neg,
    alg_reciprocal,
    isolate_real_roots,
)


def sqrt2():
    return AlgebraicReal.from_poly(IntPoly((-2, 0, 1)), Fraction(1), Fraction(2))


def test_from_rational():
    half = AlgebraicReal.from_rational(Fraction(1, 2))
    assert half.is_rational()
    assert half.as_rational() == Fraction(1, 2)
    assert half.to_float() == 0.5


def test_from_poly_validates_interval():
    p = IntPoly((-2, 0, 1))
    with pytest.raises(ValueError):
        AlgebraicReal.from_poly(p, Fraction(2), Fraction(3))  # no root there
    with pytest.raises(ValueError):
        AlgebraicReal.from_poly(p, Fraction(-2), Fraction(2))  # two roots


def test_from_poly_requires_irreducible():
    with pytest.raises(ValueError):
        AlgebraicReal.from_poly(IntPoly((-1, 0, 1)), Fraction(0), Fraction(2))


def test_to_float_accuracy():
    assert abs(sqrt2().to_float() - math.sqrt(2)) < 1e-12


def test_refined_keeps_root():
    a = sqrt2().refined(Fraction(1, 1024))
    lo, hi = a.interval
    assert hi - lo <= Fraction(1, 1024)
    assert lo < Fraction(math.sqrt(2)).limit_denominator(10**6) < hi


def test_sign():
    assert sqrt2().sign() == 1
    assert alg_neg(sqrt2()).sign() == -1
    assert AlgebraicReal.from_rational(0).sign() == 0


def test_eq_and_cmp():
    a = sqrt2()
    b = AlgebraicReal.from_poly(IntPoly((-2, 0, 1)), Fraction(1, 2), Fraction(3, 2))
    assert alg_eq(a, b)
    assert a == b
    neg = alg_neg(a)
    assert alg_cmp(neg, a) < 0
    assert alg_cmp(a, a) == 0
    assert neg < a
    one = AlgebraicReal.from_rational(1)
    assert alg_cmp(one, a) < 0


def test_reciprocal():
    a = sqrt2()
    r = alg_reciprocal(a)
    assert abs(r.to_float() - 1 / math.sqrt(2)) < 1e-12
    assert alg_eq(alg_reciprocal(r), a)
    half = alg_reciprocal(AlgebraicReal.from_rational(2))
    assert half.as_rational() == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        alg_reciprocal(AlgebraicReal.from_rational(0))


def test_neg_of_rational():
    assert alg_neg(AlgebraicReal.from_rational(Fraction(3, 4))).as_rational() == \
        Fraction(-3, 4)


def test_isolate_known():
    p = IntPoly((-2, 0, 1))
    roots = isolate_real_roots(p)
    assert len(roots) == 2
    vals = sorted(r.to_float() for r, _ in roots)
    assert abs(vals[0] + math.sqrt(2)) < 1e-9
    assert abs(vals[1] - math.sqrt(2)) < 1e-9
    assert all(m == 1 for _, m in roots)


def test_isolate_multiplicity():
    p = IntPoly((1, -2, 1)) * IntPoly((-3, 1))  # (x-1)^2 (x-3)
    roots = isolate_real_roots(p)
    by_val = {round(r.to_float()): m for r, m in roots}
    assert by_val == {1: 2, 3: 1}


def test_isolate_is_sorted_and_disjoint():
    rng = random.Random(7)
    for _ in range(25):
        deg = rng.randint(1, 5)
        coeffs = [rng.randint(-6, 6) for _ in range(deg)] + [rng.randint(1, 6)]
        roots = isolate_real_roots(IntPoly(tuple(coeffs)))
        vals = [r.to_float() for r, _ in roots]
        assert vals == sorted(vals)
        for (a, _), (b, _) in zip(roots, roots[1:]):
            assert a.interval[1] <= b.interval[0] or not alg_eq(a, b)
            assert alg_cmp(a, b) < 0


def test_cubic_root_of_smallest_pisot_polynomial():
    p = IntPoly((-1, -1, 0, 1))  # x^3 - x - 1, one real root ~1.3247
    roots = isolate_real_roots(p)
    assert len(roots) == 1
    rho = roots[0][0]
    assert abs(rho.to_float() - 1.324717957244746) < 1e-12
    assert AlgebraicReal.from_rational(1) < rho
