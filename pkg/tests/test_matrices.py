import random
from fractions import Fraction
from math import comb

from novikov.exact import (
    IntPoly,
    Matrix,
    RatFunc,
    char_poly,
    exterior_power,
    exterior_square_cyclic,
    nullspace,
    param,
    rank,
    rf_rank,
)


def rand_matrix(rng, n, lo=-4, hi=4):
    return Matrix.from_rows(
        [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)])


def test_matmul_and_transpose():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[0, 1], [1, 0]])
    assert a.matmul(b).to_rows() == [[2, 1], [4, 3]]
    assert a.transpose().to_rows() == [[1, 3], [2, 4]]


def test_exterior_power_shapes():
    rng = random.Random(1)
    m = rand_matrix(rng, 4)
    for k in range(5):
        ek = exterior_power(m, k, one=Fraction(1))
        assert ek.rows == ek.cols == comb(4, k)
    assert exterior_power(m, 0, one=Fraction(1)).entries == [Fraction(1)]


def test_exterior_functoriality():
    """Lambda^k(AB) = Lambda^k(A) Lambda^k(B) on random integer matrices."""
    rng = random.Random(42)
    for _ in range(15):
        n = rng.randint(2, 4)
        a, b = rand_matrix(rng, n), rand_matrix(rng, n)
        ab = a.matmul(b)
        for k in range(n + 1):
            lhs = exterior_power(ab, k, one=Fraction(1))
            rhs = exterior_power(a, k, one=Fraction(1)).matmul(
                exterior_power(b, k, one=Fraction(1)))
            assert lhs == rhs, (n, k)


def test_top_exterior_power_is_determinant():
    rng = random.Random(5)
    for _ in range(10):
        m = rand_matrix(rng, 3)
        det = exterior_power(m, 3, one=Fraction(1)).entries[0]
        assert char_poly(m)(0) * (-1) ** 3 == det


def test_exterior_square_cyclic_cofactor_identity():
    """In the cyclic basis, Lambda^2(A) of a 3x3 matrix is the transposed
    cofactor action: Lambda^2(A) = det(A) * (A^{-1})^T when A is invertible."""
    rng = random.Random(8)
    done = 0
    while done < 10:
        a = rand_matrix(rng, 3)
        det = -char_poly(a)(0)
        if det == 0:
            continue
        done += 1
        sq = exterior_square_cyclic(a)
        # check against the adjugate transpose: adj(A) A = det(A) I, so
        # det(A) (A^{-1})^T = adj(A)^T
        prod = sq.matmul(a.transpose())
        for i in range(3):
            for j in range(3):
                want = det if i == j else 0
                assert prod[i, j] == want


def test_exterior_square_cyclic_matches_lex_up_to_basis():
    # the cyclic basis (e2^e3, e3^e1, e1^e2) differs from lex
    # (e1^e2, e1^e3, e2^e3) by a permutation with one sign flip
    rng = random.Random(11)
    m = rand_matrix(rng, 3)
    lex = exterior_power(m, 2, one=Fraction(1))
    cyc = exterior_square_cyclic(m)
    # change of basis: lex index 0 <-> cyclic 2, lex 1 <-> -cyclic 1, lex 2 <-> cyclic 0
    perm = [(0, 2, 1), (1, 1, -1), (2, 0, 1)]
    for li, ci, si in perm:
        for lj, cj, sj in perm:
            assert lex[li, lj] == si * sj * cyc[ci, cj]


def test_char_poly_known():
    m = Matrix.from_rows([[0, 0, 1], [1, 0, 1], [0, 1, 0]])
    assert char_poly(m).primitive().coeffs == (-1, -1, 0, 1)  # x^3 - x - 1
    ident = Matrix.from_rows([[1, 0], [0, 1]])
    assert char_poly(ident).primitive().coeffs == (1, -2, 1)  # (x-1)^2


def test_char_poly_clears_denominators():
    m = Matrix.from_rows([[Fraction(1, 2), 0], [0, Fraction(1, 3)]])
    p = char_poly(m)
    assert all(isinstance(c, int) for c in p.coeffs)
    assert p(Fraction(1, 2)) == 0 and p(Fraction(1, 3)) == 0


def test_rank_fraction():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    m = Matrix(3, 3, [Fraction(x) for x in m.entries])
    assert rank(m) == 2


def test_rf_rank_with_parameters():
    r = param("r")
    zero, one = RatFunc(0), RatFunc(1)
    # rows (1, r) and (r, r^2) are proportional over Q(r)
    m = Matrix(2, 2, [one, r, r, r * r])
    assert rf_rank(m) == 1
    m2 = Matrix(2, 2, [one, r, zero, one])
    assert rf_rank(m2) == 2


def test_nullspace_known():
    one, zero = RatFunc(1), RatFunc(0)
    # x + y = 0 in Q^3: kernel is 2-dimensional
    m = Matrix(1, 3, [one, one, zero])
    basis = nullspace(m)
    assert len(basis) == 2
    for vec in basis:
        assert (vec[0] + vec[1]).is_zero()


def test_nullspace_of_full_rank_is_empty():
    one, zero = RatFunc(1), RatFunc(0)
    m = Matrix(2, 2, [one, zero, zero, one])
    assert nullspace(m) == []


def test_nullspace_membership_random():
    rng = random.Random(3)
    for _ in range(10):
        rows, cols = rng.randint(1, 3), rng.randint(2, 4)
        m = Matrix(rows, cols,
                   [RatFunc(rng.randint(-3, 3)) for _ in range(rows * cols)])
        basis = nullspace(m)
        assert len(basis) == cols - rf_rank(m)
        for vec in basis:
            for r in range(rows):
                acc = RatFunc(0)
                for c in range(cols):
                    acc = acc + m[r, c] * vec[c]
                assert acc.is_zero()
