"""Invariant taming/LCK cone feasibility.

Decides numerically whether the kernel of d_theta on invariant 2-forms meets
the open cone of J-taming (resp. J-compatible) positive forms.  The
d_theta-closedness side of a certificate is exact (the kernel basis is
computed by rational elimination); the positivity side is floating point and
an infeasible verdict is evidence, not proof.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .chevalley import (
    InvariantForm,
    LieAlgebraModel,
    LieModelError,
    d_theta_matrix,
    wedge_basis,
)
from .exact import Matrix, RatFunc, nullspace

FEASIBILITY_TOL = 1e-6
DEFAULT_RESTARTS = 64
DEFAULT_MAX_ITERS = 5000


@dataclass
class TamingCertificate:
    coefficients: list  # floats, in the kernel-basis coordinate space
    lambda_min: float
    kind: str  # "taming" | "lck"
    feasible: bool
    reason: str = ""

    def to_json(self):
        return json.dumps({
            "coefficients": list(map(float, self.coefficients)),
            "lambda_min": float(self.lambda_min),
            "kind": self.kind,
            "verdict": "feasible" if self.feasible else "infeasible (evidence, not proof)",
            "reason": self.reason,
        })


def kernel_basis(model: LieAlgebraModel, theta=None):
    """Exact basis of ker d_theta on invariant 2-forms.  Parameters must be
    instantiated to rationals beforehand."""
    if model.params:
        raise LieModelError("instantiate parameters before cone computations")
    if theta is not None:
        model = _with_theta(model, theta)
    mat = d_theta_matrix(model, 2)
    basis = nullspace(mat)
    return [InvariantForm(model.dim, 2, tuple(vec)) for vec in basis]


def _with_theta(model, theta):
    from dataclasses import replace
    th = tuple(c if isinstance(c, RatFunc) else RatFunc(c) for c in theta)
    return replace(model, theta=th)


def form_to_matrix(form: InvariantForm):
    """Antisymmetric matrix W with W[u, v] = omega(e_u, e_v), as floats."""
    n = form.dim
    w = np.zeros((n, n))
    for (i, j), c in zip(wedge_basis(n, 2), form.coeffs):
        v = c.to_float()
        w[i, j] = v
        w[j, i] = -v
    return w


def positivity_check(form: InvariantForm, jmat) -> float:
    """Smallest eigenvalue of Sym(omega(., J.))."""
    w = form_to_matrix(form)
    m = w @ np.asarray(jmat, dtype=float)
    return float(np.linalg.eigvalsh((m + m.T) / 2).min())


def _j_float(model):
    if model.J is None:
        raise LieModelError("cone feasibility needs a complex structure J")
    return np.array([[c.to_float() for c in row] for row in model.J])


def _j_invariant_subbasis(model, basis):
    """Restrict a kernel basis to the J-invariant forms omega(J., J.) = omega,
    exactly over Q."""
    n = model.dim
    pairs = wedge_basis(n, 2)
    idx = {p: i for i, p in enumerate(pairs)}
    constraints = []  # rows over RatFunc, columns = basis coefficients
    for (u, v) in pairs:
        row = []
        for b in basis:
            # (J^T W J - W)[u, v] expressed through the form's coefficients
            acc = RatFunc(0)
            for (i, j), c in zip(pairs, b.coeffs):
                term = (model.J[i][u] * model.J[j][v] - model.J[i][v] * model.J[j][u]) * c
                acc = acc + term
            acc = acc - _entry(b, idx, u, v)
            row.append(acc)
        constraints.append(row)
    mat = Matrix(len(constraints), len(basis), [x for r in constraints for x in r])
    combo = nullspace(mat)
    out = []
    for vec in combo:
        form = InvariantForm.zero(n, 2)
        for coef, b in zip(vec, basis):
            form = form + b.scale(coef)
        out.append(form)
    return out


def _entry(form, idx, u, v):
    if u == v:
        return RatFunc(0)
    if u < v:
        return form.coeffs[idx[(u, v)]]
    return -form.coeffs[idx[(v, u)]]


def taming_feasibility(model: LieAlgebraModel, kind="taming", theta=None,
                       tol=FEASIBILITY_TOL, restarts=DEFAULT_RESTARTS,
                       max_iters=DEFAULT_MAX_ITERS, seed=None) -> TamingCertificate:
    """Maximize lambda_min(Sym(omega(., J.))) over the unit sphere of the
    kernel-coefficient space by projected subgradient ascent with restarts."""
    if kind not in ("taming", "lck"):
        raise ValueError("kind must be 'taming' or 'lck'")
    if theta is not None:
        model = _with_theta(model, theta)
    basis = kernel_basis(model)
    if kind == "lck":
        basis = _j_invariant_subbasis(model, basis)
    if not basis:
        return TamingCertificate([], 0.0, kind, False, reason="kernel is zero")
    jmat = _j_float(model)
    mats = []
    for b in basis:
        m = form_to_matrix(b) @ jmat
        mats.append((m + m.T) / 2)
    mats = np.array(mats)

    if seed is None:
        seed = int(os.environ.get("NOVIKOV_SEED", "0"))
    rng = np.random.default_rng(seed)
    dim = len(basis)

    def lam_min(x):
        vals, vecs = np.linalg.eigh(np.tensordot(x, mats, axes=1))
        return vals[0], vecs[:, 0]

    best_x, best_val = None, -np.inf
    for _ in range(restarts):
        x = rng.standard_normal(dim)
        x /= np.linalg.norm(x)
        run_best, stale = -np.inf, 0
        for it in range(1, max_iters + 1):
            val, v = lam_min(x)
            if val > best_val:
                best_val, best_x = val, x.copy()
            if val > run_best + 1e-12:
                run_best, stale = val, 0
            else:
                stale += 1
                if stale > 200:  # plateau, this restart has converged
                    break
            grad = np.array([v @ m @ v for m in mats])  # subgradient of lambda_min
            gn = np.linalg.norm(grad)
            if gn < 1e-14:
                break
            x = x + (1.0 / it) * grad / gn
            x /= np.linalg.norm(x)
        val, _ = lam_min(x)
        if val > best_val:
            best_val, best_x = val, x
        if best_val > 10 * tol:
            break  # feasibility is established; further restarts only polish

    feasible = best_val > tol
    reason = "" if feasible else "best lambda_min <= tolerance over all restarts"
    return TamingCertificate(list(best_x), float(best_val), kind, feasible, reason)


def certificate_form(model: LieAlgebraModel, cert: TamingCertificate,
                     theta=None, max_denominator=10**6) -> InvariantForm:
    """Exact reconstruction: rationalize the certificate coefficients in the
    kernel basis; the result is d_theta-closed exactly by construction."""
    if theta is not None:
        model = _with_theta(model, theta)
    basis = kernel_basis(model)
    if cert.kind == "lck":
        basis = _j_invariant_subbasis(model, basis)
    form = InvariantForm.zero(model.dim, 2)
    for c, b in zip(cert.coefficients, basis):
        q = Fraction(c).limit_denominator(max_denominator)
        form = form + b.scale(RatFunc(q))
    return form
