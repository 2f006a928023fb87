"""Integer and rational polynomial arithmetic, Sturm sequences, root counting.

Polynomials are stored densely, lowest degree first.  ``IntPoly`` keeps
arbitrary-precision integer coefficients; the Sturm machinery works over
``fractions.Fraction`` internally so no precision is ever lost.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

_X = sp.Symbol("x")


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial, coefficients lowest degree first."""

    coeffs: tuple

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in _strip(coeffs)))

    @property
    def degree(self):
        # degree of the zero polynomial is reported as -1
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def constant(self):
        return self.coeffs[0] if self.coeffs else 0

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, float) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPoly([x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self):
        return math.gcd(*[abs(c) for c in self.coeffs]) if self.coeffs else 0

    def primitive(self):
        """Primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading() < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    def reversed(self):
        """Coefficient reversal x^n p(1/x); constant term must be nonzero."""
        return IntPoly(list(reversed(self.coeffs)))

    def compose_neg(self):
        """p(-x)."""
        return IntPoly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def to_sympy(self):
        return sp.Poly(list(reversed(self.coeffs)), _X)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"


def from_sympy(p):
    return IntPoly(list(reversed([int(c) for c in sp.Poly(p, _X).all_coeffs()])))


def factor_squarefree_irreducible(p: IntPoly):
    """Factor into irreducible primitive integer factors with multiplicities."""
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    _, factors = p.to_sympy().factor_list()
    return [(from_sympy(f).primitive(), int(m)) for f, m in factors if f.degree(_X) > 0]


def is_irreducible(p: IntPoly):
    if p.degree < 1:
        return False
    factors = factor_squarefree_irreducible(p)
    return len(factors) == 1 and factors[0][1] == 1 and factors[0][0].degree == p.degree


# -- Sturm sequences over Q ------------------------------------------------

def _frac_divmod(num, den):
    """Polynomial division of Fraction coefficient lists (lowest first)."""
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return q, num


def sturm_sequence(p: IntPoly):
    """Sturm chain of p as lists of Fractions (p need not be squarefree;
    the chain is built from p and p', which suffices for squarefree input)."""
    seq = [[Fraction(c) for c in p.coeffs], [Fraction(c) for c in p.derivative().coeffs]]
    while seq[-1]:
        _, r = _frac_divmod(seq[-2], seq[-1])
        seq.append([-c for c in r])
    seq.pop()
    return seq


def _eval_frac(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def sign_variations(seq, x):
    signs = []
    for coeffs in seq:
        v = _eval_frac(coeffs, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: IntPoly, lo: Fraction, hi: Fraction, seq=None):
    """Number of distinct real roots of squarefree p in the half-open (lo, hi]."""
    if seq is None:
        seq = sturm_sequence(p)
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def root_bound(p: IntPoly):
    """Cauchy bound: all real roots lie in (-B, B)."""
    lead = abs(p.leading())
    return Fraction(1) + max(Fraction(abs(c), lead) for c in p.coeffs)
