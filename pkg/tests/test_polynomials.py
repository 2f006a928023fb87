import random
from fractions import Fraction

from novikov.exact import IntPoly, count_roots, sturm_sequence
from novikov.exact.polynomials import (
    factor_squarefree_irreducible,
    is_irreducible,
    root_bound,
    sign_variations,
)


def test_eval_horner():
    p = IntPoly((-1, -1, 0, 1))  # x^3 - x - 1
    assert p(2) == 5
    assert p(Fraction(1, 2)) == Fraction(-11, 8)
    assert p(0) == -1


def test_arithmetic():
    p = IntPoly((1, 1))
    q = IntPoly((-1, 1))
    assert (p * q).coeffs == (-1, 0, 1)
    assert (p + q).coeffs == (0, 2)
    assert (p - q).coeffs == (2,)
    assert (-p).coeffs == (-1, -1)


def test_degree_and_leading():
    p = IntPoly((3, 0, 2))
    assert p.degree == 2
    assert p.leading() == 2
    assert p.constant() == 3
    assert IntPoly((0,)).is_zero()


def test_derivative():
    p = IntPoly((5, -1, 0, 4))
    assert p.derivative().coeffs == (-1, 0, 12)


def test_content_primitive():
    p = IntPoly((-6, 0, 9))
    assert p.content() == 3
    assert p.primitive().coeffs == (-2, 0, 3)
    # primitive() normalizes the leading sign to positive
    assert IntPoly((2, -4)).primitive().coeffs == (-1, 2)


def test_reversed_and_compose_neg():
    p = IntPoly((-1, -1, 0, 1))
    assert p.reversed().coeffs == (1, 0, -1, -1)
    assert p.compose_neg()(2) == p(-2)


def test_irreducibility():
    assert is_irreducible(IntPoly((-1, -1, 0, 1)))
    assert is_irreducible(IntPoly((-2, 0, 1)))
    assert not is_irreducible(IntPoly((-1, 0, 1)))  # (x-1)(x+1)


def test_factor_squarefree_irreducible():
    # (x - 1)^2 (x^2 - 2)
    p = IntPoly((1, -2, 1)) * IntPoly((-2, 0, 1))
    factors = factor_squarefree_irreducible(p)
    coeff_sets = sorted(f.coeffs for f, _ in factors)
    assert coeff_sets == [(-2, 0, 1), (-1, 1)]
    mult = {f.coeffs: m for f, m in factors}
    assert mult[(-1, 1)] == 2
    assert mult[(-2, 0, 1)] == 1


def test_sturm_known_counts():
    p = IntPoly((-2, 0, 1))  # x^2 - 2
    seq = sturm_sequence(p)
    assert count_roots(p, Fraction(0), Fraction(2), seq) == 1
    assert count_roots(p, Fraction(-2), Fraction(0), seq) == 1
    assert count_roots(p, Fraction(-2), Fraction(2), seq) == 2
    assert count_roots(p, Fraction(2), Fraction(10), seq) == 0


def test_sturm_open_closed_convention():
    # count over (lo, hi]: a root exactly at hi is counted, at lo it is not
    p = IntPoly((-1, 1))  # x - 1
    assert count_roots(p, Fraction(0), Fraction(1)) == 1
    assert count_roots(p, Fraction(1), Fraction(2)) == 0


def test_sign_variations():
    p = IntPoly((-2, 0, 1))
    seq = sturm_sequence(p)
    assert sign_variations(seq, Fraction(-2)) - sign_variations(seq, Fraction(2)) == 2


def test_root_bound_contains_roots():
    p = IntPoly((-100, 0, 1))  # roots +-10
    b = root_bound(p)
    assert b >= 10


def test_sturm_against_float_oracle():
    """Sturm counts on random degree <= 6 polynomials match numpy's roots."""
    import numpy as np

    rng = random.Random(20240817)
    for _ in range(100):
        deg = rng.randint(1, 6)
        coeffs = [rng.randint(-8, 8) for _ in range(deg)] + [rng.randint(1, 8)]
        p = IntPoly(tuple(coeffs))
        roots = np.roots(list(reversed(coeffs)))
        real = [r.real for r in roots if abs(r.imag) < 1e-9]
        lo, hi = Fraction(-20), Fraction(20)
        # floats within 1e-9 of the window edge would make the oracle ambiguous
        if any(abs(abs(r) - 20) < 1e-6 for r in real):
            continue
        # Sturm counts distinct roots; deduplicate the float roots to match
        want = len({round(r, 7) for r in real if -20 < r <= 20})
        got = count_roots(p, lo, hi, sturm_sequence(p))
        assert got == want, f"poly {coeffs}: sturm {got}, oracle {want}"
