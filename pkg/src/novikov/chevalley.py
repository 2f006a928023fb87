"""Twisted invariant cohomology of Lie algebras.

Builds the Chevalley-Eilenberg differential d (sign convention
d a (X, Y) = -a([X, Y])) and its twist d_theta = d - theta ^ .  on the exterior
algebra of the dual, computes cohomology dimensions over the rational-function
field of the model's parameters, provides the twisted Hodge operators for a
declared orthonormal coframe, and searches for the bracket obstruction that
forbids d_theta-exact taming forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .exact import Matrix, RatFunc, rf_rank
from .exact.ratfunc import ONE, ZERO


class LieModelError(ValueError):
    pass


@lru_cache(maxsize=None)
def wedge_basis(n, k):
    return tuple(combinations(range(n), k))


@lru_cache(maxsize=None)
def _basis_index(n, k):
    return {s: i for i, s in enumerate(wedge_basis(n, k))}


def merge_sign(s, t):
    """Sign of sorting the concatenation of disjoint increasing tuples s, t;
    0 if they intersect."""
    if set(s) & set(t):
        return 0, ()
    merged = tuple(sorted(s + t))
    # count inversions between s and t
    inv = sum(1 for a in s for b in t if a > b)
    return (-1) ** inv, merged


@dataclass(frozen=True)
class InvariantForm:
    dim: int
    degree: int
    coeffs: tuple  # RatFunc per lexicographic wedge-basis element

    def __post_init__(self):
        want = comb(self.dim, self.degree) if 0 <= self.degree <= self.dim else 0
        cs = tuple(c if isinstance(c, RatFunc) else RatFunc(c) for c in self.coeffs)
        if len(cs) != want:
            raise LieModelError(
                f"degree-{self.degree} form on dim {self.dim} needs {want} coefficients")
        object.__setattr__(self, "coeffs", cs)

    @staticmethod
    def zero(dim, degree):
        if degree > dim or degree < 0:
            return InvariantForm(dim, min(max(degree, 0), dim), ())
        return InvariantForm(dim, degree, (ZERO,) * comb(dim, degree))

    @staticmethod
    def from_dict(dim, degree, entries):
        """entries: {index tuple: coefficient}."""
        idx = _basis_index(dim, degree)
        coeffs = [ZERO] * comb(dim, degree)
        for subset, c in entries.items():
            coeffs[idx[tuple(subset)]] = c if isinstance(c, RatFunc) else RatFunc(c)
        return InvariantForm(dim, degree, tuple(coeffs))

    @staticmethod
    def covector(dim, i):
        return InvariantForm.from_dict(dim, 1, {(i,): ONE})

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other):
        self._check(other)
        return InvariantForm(self.dim, self.degree,
                             tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return InvariantForm(self.dim, self.degree,
                             tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return InvariantForm(self.dim, self.degree, tuple(-c for c in self.coeffs))

    def scale(self, c):
        c = c if isinstance(c, RatFunc) else RatFunc(c)
        return InvariantForm(self.dim, self.degree, tuple(c * x for x in self.coeffs))

    def _check(self, other):
        if self.dim != other.dim or self.degree != other.degree:
            raise LieModelError("form dimension/degree mismatch")

    def __eq__(self, other):
        return (isinstance(other, InvariantForm) and self.dim == other.dim
                and self.degree == other.degree and (self - other).is_zero())

    def subs(self, mapping):
        return InvariantForm(self.dim, self.degree,
                             tuple(c.subs(mapping) for c in self.coeffs))

    def __repr__(self):
        terms = []
        for s, c in zip(wedge_basis(self.dim, self.degree), self.coeffs):
            if not c.is_zero():
                mono = "^".join(f"e{i+1}" for i in s) or "1"
                terms.append(f"({c.expr})*{mono}")
        return " + ".join(terms) or "0"


def wedge(a: InvariantForm, b: InvariantForm) -> InvariantForm:
    if a.dim != b.dim:
        raise LieModelError("wedge of forms on different algebras")
    n = a.dim
    deg = a.degree + b.degree
    if deg > n:
        return InvariantForm.zero(n, n)  # zero-form tag at top degree
    idx = _basis_index(n, deg)
    out = [ZERO] * comb(n, deg)
    for s, cs in zip(wedge_basis(n, a.degree), a.coeffs):
        if cs.is_zero():
            continue
        for t, ct in zip(wedge_basis(n, b.degree), b.coeffs):
            if ct.is_zero():
                continue
            sign, merged = merge_sign(s, t)
            if sign:
                term = cs * ct
                out[idx[merged]] = out[idx[merged]] + (term if sign > 0 else -term)
    return InvariantForm(n, deg, tuple(out))


@dataclass(frozen=True)
class LieAlgebraModel:
    """Structure constants over Q(params), plus the Lee covector and optional
    complex structure / orthonormal coframe declaration / named forms."""

    dim: int
    params: tuple = ()
    brackets: dict = field(default_factory=dict)  # (i,j) i<j -> {k: RatFunc}
    theta: tuple = None
    J: tuple = None  # rows of RatFunc; column v holds J e_v
    coframe_metric: bool = False
    named_forms: dict = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        bk = {}
        for (i, j), comps in self.brackets.items():
            if not 0 <= i < j < self.dim:
                raise LieModelError(f"bad bracket index pair ({i}, {j})")
            bk[(i, j)] = {k: (c if isinstance(c, RatFunc) else RatFunc(c))
                          for k, c in comps.items() if not RatFunc(c).is_zero()}
        object.__setattr__(self, "brackets", bk)
        th = self.theta if self.theta is not None else (ZERO,) * self.dim
        th = tuple(c if isinstance(c, RatFunc) else RatFunc(c) for c in th)
        if len(th) != self.dim:
            raise LieModelError("theta must have one coefficient per covector")
        object.__setattr__(self, "theta", th)
        if self.J is not None:
            rows = tuple(tuple(c if isinstance(c, RatFunc) else RatFunc(c) for c in r)
                         for r in self.J)
            if len(rows) != self.dim or any(len(r) != self.dim for r in rows):
                raise LieModelError("J must be a dim x dim matrix")
            object.__setattr__(self, "J", rows)

    # -- structure ---------------------------------------------------------

    def struct(self, i, j, k):
        """Component k of [e_i, e_j]."""
        if i == j:
            return ZERO
        if i < j:
            return self.brackets.get((i, j), {}).get(k, ZERO)
        return -self.brackets.get((j, i), {}).get(k, ZERO)

    def bracket_vec(self, u, v):
        """[u, v] for coefficient vectors of RatFunc."""
        out = [ZERO] * self.dim
        for i in range(self.dim):
            if u[i].is_zero():
                continue
            for j in range(self.dim):
                if v[j].is_zero() or i == j:
                    continue
                comps = self.brackets.get((i, j)) if i < j else self.brackets.get((j, i))
                if not comps:
                    continue
                sign = 1 if i < j else -1
                for k, c in comps.items():
                    term = u[i] * v[j] * c
                    out[k] = out[k] + (term if sign > 0 else -term)
        return out

    def apply_J(self, v):
        if self.J is None:
            raise LieModelError("model has no complex structure J")
        return [sum((self.J[i][j] * v[j] for j in range(self.dim)), ZERO)
                for i in range(self.dim)]

    def covector_apply(self, cov, v):
        return sum((cov[i] * v[i] for i in range(self.dim)), ZERO)

    def theta_form(self):
        return InvariantForm(self.dim, 1, self.theta)

    def instantiate(self, mapping) -> "LieAlgebraModel":
        """Substitute parameters by rationals (or other expressions)."""
        sub = lambda c: c.subs(mapping)
        brackets = {ij: {k: sub(c) for k, c in comps.items()}
                    for ij, comps in self.brackets.items()}
        remaining = tuple(p for p in self.params
                          if p not in {str(k) for k in mapping})
        return replace(
            self,
            params=remaining,
            brackets=brackets,
            theta=tuple(sub(c) for c in self.theta),
            J=None if self.J is None else tuple(tuple(sub(c) for c in r) for r in self.J),
            named_forms={k: f.subs(mapping) for k, f in self.named_forms.items()},
        )


# -- differential and Hodge operators --------------------------------------

def d_covector(model: LieAlgebraModel, i) -> InvariantForm:
    """d e^i = - sum_{j<k} c^i_{jk} e^j ^ e^k."""
    n = model.dim
    entries = {}
    for (j, k), comps in model.brackets.items():
        c = comps.get(i)
        if c is not None and not c.is_zero():
            entries[(j, k)] = -c
    return InvariantForm.from_dict(n, 2, entries)


def d_apply(model: LieAlgebraModel, form: InvariantForm) -> InvariantForm:
    n = model.dim
    if form.degree >= n:
        return InvariantForm.zero(n, n)
    out = InvariantForm.zero(n, form.degree + 1)
    for s, cs in zip(wedge_basis(n, form.degree), form.coeffs):
        if cs.is_zero():
            continue
        for t, i in enumerate(s):
            rest = s[:t] + s[t + 1:]
            rest_form = InvariantForm.from_dict(n, len(rest), {rest: cs})
            term = wedge(d_covector(model, i), rest_form)
            if t % 2 == 1:
                term = -term
            out = out + term
    return out


def d_theta_apply(model: LieAlgebraModel, form: InvariantForm) -> InvariantForm:
    if form.degree >= model.dim:
        return InvariantForm.zero(model.dim, model.dim)
    return d_apply(model, form) - wedge(model.theta_form(), form)


def d_minus_theta_apply(model, form):
    if form.degree >= model.dim:
        return InvariantForm.zero(model.dim, model.dim)
    return d_apply(model, form) + wedge(model.theta_form(), form)


def hodge_star(model: LieAlgebraModel, form: InvariantForm) -> InvariantForm:
    """Star for the declared orthonormal coframe, volume e^1 ^ ... ^ e^n."""
    if not model.coframe_metric:
        raise LieModelError("no orthonormal coframe declared on this model")
    n = model.dim
    k = form.degree
    idx = _basis_index(n, n - k)
    out = [ZERO] * comb(n, n - k)
    for s, cs in zip(wedge_basis(n, k), form.coeffs):
        if cs.is_zero():
            continue
        comp = tuple(i for i in range(n) if i not in s)
        sign, _ = merge_sign(s, comp)
        out[idx[comp]] = cs if sign > 0 else -cs
    return InvariantForm(n, n - k, tuple(out))


def delta_theta(model: LieAlgebraModel, form: InvariantForm) -> InvariantForm:
    """delta_theta = - * d_{-theta} *."""
    return -hodge_star(model, d_minus_theta_apply(model, hodge_star(model, form)))


def laplacian_theta(model: LieAlgebraModel, form: InvariantForm) -> InvariantForm:
    out = InvariantForm.zero(model.dim, form.degree)
    if form.degree < model.dim:
        out = out + delta_theta(model, d_theta_apply(model, form))
    if form.degree > 0:
        out = out + d_theta_apply(model, delta_theta(model, form))
    return out


# -- validation -------------------------------------------------------------

@dataclass
class ValidationReport:
    ok: bool
    violations: list

    def __bool__(self):
        return self.ok


def validate(model: LieAlgebraModel) -> ValidationReport:
    """Jacobi identity, d theta = 0, J^2 = -I, and d(d e^i) = 0 on Lambda^1."""
    violations = []
    n = model.dim
    basis_vecs = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for i, j, k in combinations(range(n), 3):
        acc = model.bracket_vec(model.bracket_vec(basis_vecs[i], basis_vecs[j]), basis_vecs[k])
        acc2 = model.bracket_vec(model.bracket_vec(basis_vecs[j], basis_vecs[k]), basis_vecs[i])
        acc3 = model.bracket_vec(model.bracket_vec(basis_vecs[k], basis_vecs[i]), basis_vecs[j])
        total = [a + b + c for a, b, c in zip(acc, acc2, acc3)]
        if any(not c.is_zero() for c in total):
            violations.append(("jacobi", (i + 1, j + 1, k + 1)))
    if not d_apply(model, model.theta_form()).is_zero():
        violations.append(("theta_not_closed", None))
    if model.J is not None:
        if n % 2 != 0:
            violations.append(("J_on_odd_dimension", None))
        for i in range(n):
            for j in range(n):
                entry = sum((model.J[i][k] * model.J[k][j] for k in range(n)), ZERO)
                want = RatFunc(-1) if i == j else ZERO
                if not (entry - want).is_zero():
                    violations.append(("J_squared", (i + 1, j + 1)))
    for i in range(n):
        if not d_apply(model, d_covector(model, i)).is_zero():
            violations.append(("d_squared_on_covector", i + 1))
    return ValidationReport(not violations, violations)


# -- cohomology --------------------------------------------------------------

def d_theta_matrix(model: LieAlgebraModel, k) -> Matrix:
    """Matrix of d_theta from degree k to k+1 in the wedge bases."""
    n = model.dim
    cols = comb(n, k)
    rows = comb(n, k + 1) if k + 1 <= n else 0
    entries = [[ZERO] * cols for _ in range(rows)]
    for ci, s in enumerate(wedge_basis(n, k)):
        mono = InvariantForm.from_dict(n, k, {s: ONE})
        image = d_theta_apply(model, mono)
        if image.degree == k + 1:
            for ri, c in enumerate(image.coeffs):
                entries[ri][ci] = c
    return Matrix(rows, cols, [x for r in entries for x in r])


def twisted_ce_cohomology(model: LieAlgebraModel):
    """dim H^k(Lambda g*, d_theta) for k = 0..dim."""
    n = model.dim
    ranks = [rf_rank(d_theta_matrix(model, k)) for k in range(n)]
    dims = []
    for k in range(n + 1):
        rk_out = ranks[k] if k < n else 0
        rk_in = ranks[k - 1] if k > 0 else 0
        dims.append(comb(n, k) - rk_out - rk_in)
    return dims


def _operator_matrix(model, k, op):
    n = model.dim
    size = comb(n, k)
    cols = []
    for s in wedge_basis(n, k):
        mono = InvariantForm.from_dict(n, k, {s: ONE})
        cols.append(op(model, mono).coeffs)
    return Matrix(size, size, [cols[c][r] for r in range(size) for c in range(size)])


def harmonic_dims(model: LieAlgebraModel):
    """dim ker Delta_theta per degree; also checks the kernel equals
    ker d_theta intersect ker delta_theta degree-wise."""
    if model.params:
        raise LieModelError("instantiate parameters before Hodge computations")
    if not model.coframe_metric:
        raise LieModelError("no orthonormal coframe declared on this model")
    n = model.dim
    dims = []
    for k in range(n + 1):
        lap = _operator_matrix(model, k, laplacian_theta)
        dims.append(comb(n, k) - rf_rank(lap))
        # ker Delta = ker d_theta  cap  ker delta_theta: compare ranks of the
        # stacked (d_theta; delta_theta) operator with the Laplacian's kernel
        dk = d_theta_matrix(model, k)
        deltak = _delta_matrix(model, k)
        stacked = Matrix(dk.rows + deltak.rows, comb(n, k), dk.entries + deltak.entries)
        if comb(n, k) - rf_rank(stacked) != dims[-1]:
            raise LieModelError(f"Hodge kernel mismatch in degree {k}")
    return dims


def _delta_matrix(model, k):
    n = model.dim
    cols = comb(n, k)
    rows = comb(n, k - 1) if k >= 1 else 0
    entries = [[ZERO] * cols for _ in range(rows)]
    for ci, s in enumerate(wedge_basis(n, k)):
        mono = InvariantForm.from_dict(n, k, {s: ONE})
        image = delta_theta(model, mono) if k >= 1 else InvariantForm.zero(n, 0)
        if k >= 1:
            for ri, c in enumerate(image.coeffs):
                entries[ri][ci] = c
    return Matrix(rows, cols, [x for r in entries for x in r])


# -- obstruction search ------------------------------------------------------

@dataclass(frozen=True)
class ObstructionCertificate:
    """Nonzero X with [X, JX] = 0, theta(X) = 0, theta(JX) = 0: every invariant
    d_theta-exact 2-form vanishes on (X, JX), so none tames J."""

    vector: tuple  # Fractions

    def __iter__(self):
        return iter(self.vector)


def _is_certificate(model, vec):
    v = [RatFunc(c) for c in vec]
    if all(c.is_zero() for c in v):
        return False
    jv = model.apply_J(v)
    if not model.covector_apply(model.theta, v).is_zero():
        return False
    if not model.covector_apply(model.theta, jv).is_zero():
        return False
    return all(c.is_zero() for c in model.bracket_vec(v, jv))


def obstruction_search(model: LieAlgebraModel, samples=2000, seed=0):
    """Search order: basis vectors, two-term integer combinations with
    coefficients in [-4, 4], then a seeded sample of bounded rational
    combinations (denominators <= 4).  Returns None when the budget is
    exhausted; that is evidence of absence, not a proof."""
    import random as _random

    n = model.dim
    if model.J is None:
        raise LieModelError("obstruction search needs a complex structure J")
    for i in range(n):
        vec = tuple(Fraction(int(i == j)) for j in range(n))
        if _is_certificate(model, vec):
            return ObstructionCertificate(vec)
    coeff_range = [Fraction(c) for c in range(-4, 5) if c]
    for i, j in combinations(range(n), 2):
        for a in coeff_range:
            for b in coeff_range:
                vec = [Fraction(0)] * n
                vec[i], vec[j] = a, b
                if _is_certificate(model, tuple(vec)):
                    return ObstructionCertificate(tuple(vec))
    rng = _random.Random(seed)
    for _ in range(samples):
        vec = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(n))
        if _is_certificate(model, vec):
            return ObstructionCertificate(vec)
    return None
