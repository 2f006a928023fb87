"""Real algebraic numbers as (irreducible minimal polynomial, isolating interval).

Every decision (equality, sign, ordering) is made exactly by Sturm counts and
interval bisection; floating point appears only in ``to_float``, which is a
convenience approximation, never a decision path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .polynomials import (
    IntPoly,
    count_roots,
    factor_squarefree_irreducible,
    is_irreducible,
    root_bound,
    sturm_sequence,
)


@dataclass(frozen=True)
class AlgebraicReal:
    minpoly: IntPoly
    interval: tuple  # open (lo, hi), Fractions
    _sturm: list = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        lo, hi = self.interval
        object.__setattr__(self, "interval", (Fraction(lo), Fraction(hi)))

    @staticmethod
    def from_rational(q) -> "AlgebraicReal":
        q = Fraction(q)
        p = IntPoly([-q.numerator, q.denominator]).primitive()
        return AlgebraicReal(p, (q - 1, q + 1))

    @staticmethod
    def from_poly(p: IntPoly, lo, hi) -> "AlgebraicReal":
        """Validated constructor: p must be irreducible and (lo, hi) isolate
        exactly one of its real roots."""
        p = p.primitive()
        if not is_irreducible(p):
            raise ValueError(f"{p!r} is not irreducible over Q")
        lo, hi = Fraction(lo), Fraction(hi)
        if p(lo) == 0 or p(hi) == 0:
            raise ValueError("interval endpoints must not be roots")
        if count_roots(p, lo, hi) != 1:
            raise ValueError("interval does not isolate exactly one root")
        return AlgebraicReal(p, (lo, hi))

    def sturm(self):
        if self._sturm is None:
            object.__setattr__(self, "_sturm", sturm_sequence(self.minpoly))
        return self._sturm

    @property
    def degree(self):
        return self.minpoly.degree

    def is_rational(self):
        return self.degree == 1

    def as_rational(self) -> Fraction:
        a, b = self.minpoly.coeffs  # b*x + a
        return Fraction(-a, b)

    # -- interval refinement ----------------------------------------------

    def refined(self, width) -> "AlgebraicReal":
        """Return self with isolating interval narrower than `width`."""
        if self.is_rational():
            q = self.as_rational()
            w = Fraction(width) / 4
            return AlgebraicReal(self.minpoly, (q - w, q + w), self._sturm)
        lo, hi = self.interval
        p = self.minpoly
        slo = 1 if p(lo) > 0 else -1
        while hi - lo >= width:
            mid = (lo + hi) / 2
            v = p(mid)
            # irreducible of degree >= 2 has no rational roots, so v != 0
            if (1 if v > 0 else -1) == slo:
                lo = mid
            else:
                hi = mid
        return AlgebraicReal(self.minpoly, (lo, hi), self._sturm)

    def sign(self):
        if self.is_rational():
            q = self.as_rational()
            return (q > 0) - (q < 0)
        if self.minpoly.constant() == 0:
            raise ValueError("irreducible minpoly with zero constant term")
        x = self
        while x.interval[0] < 0 < x.interval[1]:
            x = x.refined((x.interval[1] - x.interval[0]) / 2)
        return 1 if x.interval[0] >= 0 else -1

    def to_float(self) -> float:
        if self.is_rational():
            return float(self.as_rational())
        x = self.refined(Fraction(1, 2**60))
        lo, hi = x.interval
        return float((lo + hi) / 2)

    # -- arithmetic-free exact predicates ----------------------------------

    def __eq__(self, other):
        if not isinstance(other, AlgebraicReal):
            return NotImplemented
        return alg_eq(self, other)

    def __hash__(self):
        return hash(self.minpoly)

    def __lt__(self, other):
        return alg_cmp(self, other) < 0

    def __le__(self, other):
        return alg_cmp(self, other) <= 0

    def __repr__(self):
        if self.is_rational():
            return f"AlgebraicReal({self.as_rational()})"
        return f"AlgebraicReal({list(self.minpoly.coeffs)} in {self.interval})"


def isolate_real_roots(p: IntPoly):
    """All real roots of p as (AlgebraicReal, multiplicity), intervals pairwise
    disjoint across factors."""
    if p.is_zero():
        raise ValueError("zero polynomial has no well-defined roots")
    roots = []
    for factor, mult in factor_squarefree_irreducible(p):
        roots.extend((r, mult) for r in _isolate_irreducible(factor))
    # disjointness across distinct factors: refine overlapping pairs apart
    changed = True
    while changed:
        changed = False
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                a, b = roots[i][0], roots[j][0]
                if a.minpoly == b.minpoly:
                    continue  # bisection already separated same-factor roots
                if a.interval[1] <= b.interval[0] or b.interval[1] <= a.interval[0]:
                    continue
                w = min(a.interval[1] - a.interval[0], b.interval[1] - b.interval[0]) / 2
                roots[i] = (a.refined(w), roots[i][1])
                roots[j] = (b.refined(w), roots[j][1])
                changed = True
    roots.sort(key=lambda rm: rm[0].interval[0])
    return roots


def _isolate_irreducible(p: IntPoly):
    if p.degree == 1:
        return [AlgebraicReal.from_rational(Fraction(-p.coeffs[0], p.coeffs[1]))]
    seq = sturm_sequence(p)
    bound = root_bound(p)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = count_roots(p, lo, hi, seq)
        if n == 0:
            continue
        if n == 1 and p(lo) != 0 and p(hi) != 0:
            out.append(AlgebraicReal(p, (lo, hi), seq))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort(key=lambda r: r.interval[0])
    return out


def alg_eq(a: AlgebraicReal, b: AlgebraicReal) -> bool:
    """Exact equality: same minimal polynomial and a common root in the
    intersection of the isolating intervals."""
    if a.minpoly != b.minpoly:
        return False
    if a.is_rational():
        return True  # degree-1 minpoly pins the value
    lo = max(a.interval[0], b.interval[0])
    hi = min(a.interval[1], b.interval[1])
    if lo >= hi:
        return False
    # each interval isolates one root; a root inside the overlap is both
    return count_roots(a.minpoly, lo, hi, a.sturm()) >= 1


def alg_cmp(a: AlgebraicReal, b: AlgebraicReal) -> int:
    if alg_eq(a, b):
        return 0
    while True:
        if a.interval[1] <= b.interval[0]:
            return -1
        if b.interval[1] <= a.interval[0]:
            return 1
        w = min(a.interval[1] - a.interval[0], b.interval[1] - b.interval[0]) / 2
        a = a.refined(w)
        b = b.refined(w)


def alg_reciprocal(lam: AlgebraicReal) -> AlgebraicReal:
    """1/lam: reversed minimal polynomial, reciprocal isolating interval."""
    if lam.is_rational():
        q = lam.as_rational()
        if q == 0:
            raise ZeroDivisionError("reciprocal of zero")
        return AlgebraicReal.from_rational(1 / q)
    p = lam.minpoly.reversed().primitive()
    x = lam
    while x.interval[0] < 0 < x.interval[1]:
        x = x.refined((x.interval[1] - x.interval[0]) / 2)
    lo, hi = x.interval
    # bisection can pin an endpoint at exactly 0; step it strictly past 0
    # (the root itself is nonzero since the minpoly is irreducible)
    if lo == 0:
        cut = hi / 2
        while count_roots(x.minpoly, cut, hi, x.sturm()) != 1:
            cut /= 2
        lo = cut
    elif hi == 0:
        cut = lo / 2
        while count_roots(x.minpoly, lo, cut, x.sturm()) != 1:
            cut /= 2
        hi = cut
    return AlgebraicReal(p, (1 / hi, 1 / lo), None)


def alg_neg(lam: AlgebraicReal) -> AlgebraicReal:
    p = lam.minpoly.compose_neg().primitive()
    lo, hi = lam.interval
    return AlgebraicReal(p, (-hi, -lo))
