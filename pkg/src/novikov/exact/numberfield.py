"""Arithmetic in Q(lambda) for a fixed real algebraic generator.

Elements are residues modulo the generator's minimal polynomial, stored as
Fraction vectors of length deg(minpoly).  Only one ambient generator is ever
in play; mixed fields are unsupported by design.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebraic import AlgebraicReal


class NumberField:
    def __init__(self, generator: AlgebraicReal):
        self.generator = generator
        self.degree = generator.minpoly.degree
        # monic minpoly over Q for reduction
        lead = Fraction(generator.minpoly.leading())
        self._monic = [Fraction(c) / lead for c in generator.minpoly.coeffs]

    def zero(self):
        return NFElem(self, (Fraction(0),) * self.degree)

    def one(self):
        return self.scalar(1)

    def scalar(self, q):
        rep = [Fraction(0)] * self.degree
        rep[0] = Fraction(q)
        return NFElem(self, tuple(rep))

    def gen(self):
        if self.degree == 1:
            return self.scalar(self.generator.as_rational())
        rep = [Fraction(0)] * self.degree
        rep[1] = Fraction(1)
        return NFElem(self, tuple(rep))

    def reduce(self, coeffs):
        """Reduce a Fraction coefficient list modulo the monic minpoly."""
        coeffs = list(coeffs)
        n = self.degree
        for i in range(len(coeffs) - 1, n - 1, -1):
            c = coeffs[i]
            if c:
                for j in range(n):
                    coeffs[i - n + j] -= c * self._monic[j]
            coeffs.pop()
        coeffs += [Fraction(0)] * (n - len(coeffs))
        return NFElem(self, tuple(coeffs))

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.generator.minpoly == other.generator.minpoly

    def __hash__(self):
        return hash(self.generator.minpoly)


@dataclass(frozen=True)
class NFElem:
    field: NumberField
    rep: tuple

    def is_zero(self):
        return all(c == 0 for c in self.rep)

    def __add__(self, other):
        return NFElem(self.field, tuple(a + b for a, b in zip(self.rep, other.rep)))

    def __sub__(self, other):
        return NFElem(self.field, tuple(a - b for a, b in zip(self.rep, other.rep)))

    def __neg__(self):
        return NFElem(self.field, tuple(-a for a in self.rep))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElem(self.field, tuple(Fraction(other) * a for a in self.rep))
        out = [Fraction(0)] * (2 * self.field.degree - 1)
        for i, a in enumerate(self.rep):
            if a:
                for j, b in enumerate(other.rep):
                    out[i + j] += a * b
        return self.field.reduce(out)

    __rmul__ = __mul__

    def inverse(self):
        """Extended Euclid against the minimal polynomial."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if self.field.degree == 1:
            return NFElem(self.field, (1 / self.rep[0],))
        r0, r1 = list(self.field._monic), list(self.rep)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            r1 = _trim(r1)
            if len(r1) == 1:
                inv = 1 / r1[0]
                return self.field.reduce([c * inv for c in s1])
            q, r = _polydivmod(r0, r1)
            s = _polysub(s0, _polymul(q, s1))
            r0, r1, s0, s1 = r1, r, s1, s

    def __truediv__(self, other):
        return self * other.inverse()

    def to_float(self):
        g = self.field.generator.to_float()
        acc = 0.0
        for c in reversed(self.rep):
            acc = acc * g + float(c)
        return acc

    def __repr__(self):
        return f"NFElem{list(self.rep)}"


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _polydivmod(num, den):
    num, den = list(num), _trim(den)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, _trim(num[: len(den) - 1] or [Fraction(0)])


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polysub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]
