"""Dense matrices over the artifact's scalar fields and their exact linear algebra.

Entries may be Fractions, NFElem, or RatFunc; the generic operations below only
assume ring arithmetic (+, -, *) plus, where rank is needed, exact division.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from .numberfield import NFElem
from .polynomials import IntPoly
from .ratfunc import RatFunc


class Matrix:
    """Row-major dense matrix; immutable by convention."""

    def __init__(self, rows, cols, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows, self.cols, self.entries = rows, cols, entries

    @staticmethod
    def from_rows(rows_list) -> "Matrix":
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        if any(len(r) != cols for r in rows_list):
            raise ValueError("ragged rows")
        return Matrix(rows, cols, [x for r in rows_list for x in r])

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r):
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def to_rows(self):
        return [self.row(r) for r in range(self.rows)]

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [self[r, c] for c in range(self.cols) for r in range(self.rows)])

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for r in range(self.rows):
            for c in range(other.cols):
                acc = self[r, 0] * other[0, c]
                for k in range(1, self.cols):
                    acc = acc + self[r, k] * other[k, c]
                out.append(acc)
        return Matrix(self.rows, other.cols, out)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols
                and all(_is_zero(a - b) for a, b in zip(self.entries, other.entries)))

    def __repr__(self):
        return f"Matrix({self.to_rows()!r})"


def _is_zero(x):
    if isinstance(x, (NFElem, RatFunc)):
        return x.is_zero()
    return x == 0


def _minor_det(m: Matrix, row_idx, col_idx):
    """Determinant of the square submatrix by Leibniz expansion (orders <= 6)."""
    k = len(row_idx)
    if k == 0:
        return None
    acc = None
    for perm in permutations(range(k)):
        sign = _perm_sign(perm)
        term = m[row_idx[0], col_idx[perm[0]]]
        for i in range(1, k):
            term = term * m[row_idx[i], col_idx[perm[i]]]
        if sign < 0:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def exterior_power(m: Matrix, k: int, one=None) -> Matrix:
    """Matrix of the induced map on the k-th exterior power, wedge basis
    ordered lexicographically on index subsets."""
    if m.rows != m.cols:
        raise ValueError("exterior power needs a square matrix")
    n = m.rows
    if not 0 <= k <= n:
        raise ValueError(f"exterior power degree {k} out of range 0..{n}")
    if k == 0:
        if one is None:
            one = _one_like(m.entries[0]) if m.entries else 1
        return Matrix(1, 1, [one])
    subsets = list(combinations(range(n), k))
    entries = []
    for rows_s in subsets:
        for cols_t in subsets:
            entries.append(_minor_det(m, rows_s, cols_t))
    return Matrix(len(subsets), len(subsets), entries)


def _one_like(x):
    if isinstance(x, NFElem):
        return x.field.one()
    if isinstance(x, RatFunc):
        return RatFunc(1)
    return x - x + 1 if not isinstance(x, int) else 1


def exterior_square_cyclic(m: Matrix) -> Matrix:
    """Second exterior power of a 3x3 matrix in the cyclic basis
    {e2^e3, e3^e1, e1^e2}; for M in SL3 this is the transposed adjugate."""
    if m.rows != 3 or m.cols != 3:
        raise ValueError("cyclic wedge basis is specific to 3x3")
    cyc = [(1, 2), (2, 0), (0, 1)]
    entries = []
    for (a, b) in cyc:
        for (c, d) in cyc:
            entries.append(m[a, c] * m[b, d] - m[a, d] * m[b, c])
    return Matrix(3, 3, entries)


def char_poly(m: Matrix) -> IntPoly:
    """det(xI - M) for a rational matrix, by Faddeev-LeVerrier, with
    denominators cleared to an integer polynomial."""
    if m.rows != m.cols:
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.rows
    a = [[Fraction(m[r, c]) for c in range(n)] for r in range(n)]
    coeffs = [Fraction(1)]  # c_n = 1, then c_{n-1}, ...
    mk = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for k in range(1, n + 1):
        mk = _mat_mul_frac(a, mk)
        ck = -sum(mk[i][i] for i in range(n)) / k
        coeffs.append(ck)
        for i in range(n):
            mk[i][i] += ck
    # coeffs are highest-degree first: x^n + c_{n-1} x^{n-1} + ...
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    return IntPoly(list(reversed(ints)))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _mat_mul_frac(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def rank(m: Matrix) -> int:
    """Rank by Gaussian elimination with exact division; works over Fraction,
    NFElem, and RatFunc entries.  Over rational-function fields the pivot of
    smallest numerator total degree is chosen to control expression swell."""
    rows = [list(r) for r in m.to_rows()]
    nrows, ncols = m.rows, m.cols
    rk = 0
    for col in range(ncols):
        pivot = _choose_pivot(rows, rk, col)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        piv = rows[rk][col]
        for r in range(rk + 1, nrows):
            x = rows[r][col]
            if _is_zero(x):
                continue
            factor = x / piv
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rk])]
        rk += 1
        if rk == nrows:
            break
    return rk


def _choose_pivot(rows, start, col):
    candidates = [r for r in range(start, len(rows)) if not _is_zero(rows[r][col])]
    if not candidates:
        return None
    if isinstance(rows[candidates[0]][col], RatFunc):
        return min(candidates, key=lambda r: rows[r][col].total_degree())
    return candidates[0]


def nf_rank(m: Matrix) -> int:
    """Rank over the ambient number field Q(lambda)."""
    return rank(m)


def rf_rank(m: Matrix) -> int:
    """Generic rank over the multivariate rational-function field."""
    return rank(m)


def nullspace(m: Matrix):
    """Exact kernel basis (list of column vectors) over a field with exact
    division; returned vectors are lists of entries."""
    rows = [list(r) for r in m.to_rows()]
    nrows, ncols = m.rows, m.cols
    pivots = []
    rk = 0
    for col in range(ncols):
        pivot = _choose_pivot(rows, rk, col)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        piv = rows[rk][col]
        rows[rk] = [a / piv for a in rows[rk]]
        for r in range(nrows):
            if r != rk and not _is_zero(rows[r][col]):
                x = rows[r][col]
                rows[r] = [a - x * b for a, b in zip(rows[r], rows[rk])]
        pivots.append(col)
        rk += 1
        if rk == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    if not rows:
        return [[_mk_basis_entry(None, i == f) for i in range(ncols)] for f in free]
    one = _one_like(rows[0][0])
    zero = one - one
    basis = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for r, p in enumerate(pivots):
            vec[p] = -rows[r][f]
        basis.append(vec)
    return basis


def _mk_basis_entry(_, flag):
    return Fraction(1) if flag else Fraction(0)
