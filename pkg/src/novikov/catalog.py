"""Validated constructors for every model in scope.

Fiber-bundle side: the torus mapping torus S0, the eigen-descriptor surfaces
S+ and S-, the Hopf fiber model and the Kato blow-up transformer.  Lie-algebra
side: the S0 solvable algebra, the S+ algebra and its orthonormal coframe
model, the Oeljeklaus-Toma family, and the abelian reference algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from .chevalley import InvariantForm, LieAlgebraModel, validate
from .exact import (
    AlgebraicReal,
    IntPoly,
    Matrix,
    RatFunc,
    alg_neg,
    alg_reciprocal,
    char_poly,
    isolate_real_roots,
    param,
)
from .mapping_torus import (
    BettiProfile,
    ConjugatePair,
    EigenDescriptor,
    FiberModel,
    ModelError,
    TorusMonodromy,
    blow_up,
)

DEFAULT_S0_MATRIX = ((0, 0, 1), (1, 0, 1), (0, 1, 0))  # companion of x^3 - x - 1
DEFAULT_SPM_MATRIX = ((2, 1), (1, 1))    # eigenvalues (3 +- sqrt5)/2
DEFAULT_SMINUS_MATRIX = ((1, 1), (1, 0))  # det -1, eigenvalues phi, -1/phi


@dataclass(frozen=True)
class S0Datum:
    A: tuple  # 3x3 integer matrix, det 1, one real eigenvalue alpha > 1

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.A)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ModelError("S0 needs a 3x3 integer matrix")
        object.__setattr__(self, "A", rows)


@dataclass(frozen=True)
class SpmDatum:
    N: tuple  # 2x2 integer matrix
    sign: str  # "plus" | "minus"
    p: int = 0
    q: int = 0
    r: int = 1
    z_real: Fraction = None  # inert; only z in R admits LCK features

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.N)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ModelError("S+/S- needs a 2x2 integer matrix")
        object.__setattr__(self, "N", rows)
        if self.sign not in ("plus", "minus"):
            raise ModelError("sign must be 'plus' or 'minus'")
        if self.r == 0:
            raise ModelError("the integer r must be nonzero")


def _frac_matrix(rows):
    return Matrix.from_rows([[Fraction(x) for x in r] for r in rows])


def make_s0(datum: S0Datum):
    """TorusMonodromy fiber model + the distinguished Lee parameter alpha."""
    rows = datum.A
    cp = char_poly(_frac_matrix(rows))
    # det(A) = (-1)^3 * cp(0) for the 3x3 case
    if -cp(0) != 1:
        raise ModelError(f"S0 matrix must have determinant 1, got {-cp(0)}")
    real_roots = isolate_real_roots(cp)
    if sum(m for _, m in real_roots) != 1:
        raise ModelError("S0 matrix needs exactly one real eigenvalue "
                         "and a complex-conjugate pair")
    alpha, mult = real_roots[0]
    one = AlgebraicReal.from_rational(1)
    if mult != 1 or not one < alpha:
        raise ModelError("the real eigenvalue must be simple and exceed 1")
    model = FiberModel(3, TorusMonodromy(rows), name="s0")
    return model, alpha


def _two_real_eigen(rows):
    cp = char_poly(_frac_matrix(rows))
    roots = isolate_real_roots(cp)
    if sum(m for _, m in roots) != 2 or any(m != 1 for _, m in roots):
        raise ModelError("matrix needs two distinct real eigenvalues")
    return [r for r, _ in roots], cp


def make_splus(datum: SpmDatum):
    """S+ eigen-descriptor fiber model (dims 1,2,2,1) + alpha."""
    if datum.sign != "plus":
        raise ModelError("datum is not tagged plus")
    roots, cp = _two_real_eigen(datum.N)
    if cp(0) != 1:  # det(N) = cp(0) for the 2x2 case
        raise ModelError(f"S+ matrix must have determinant 1, got {cp(0)}")
    one = AlgebraicReal.from_rational(1)
    big = [r for r in roots if one < r]
    if len(big) != 1:
        raise ModelError("S+ matrix needs eigenvalues alpha > 1 and 1/alpha")
    alpha = big[0]
    inv = alg_reciprocal(alpha)
    if not any(r == inv for r in roots):
        raise ModelError("S+ eigenvalues must be alpha and 1/alpha")
    spectra = (
        (((AlgebraicReal.from_rational(1)), 1),),
        ((inv, 1), (alpha, 1)),
        ((inv, 1), (alpha, 1)),
        (((AlgebraicReal.from_rational(1)), 1),),
    )
    model = FiberModel(3, EigenDescriptor(3, (1, 2, 2, 1), spectra), name="splus")
    return model, alpha


def make_sminus(datum: SpmDatum):
    """S- eigen-descriptor fiber model (dims 1,2,2,1) + alpha."""
    if datum.sign != "minus":
        raise ModelError("datum is not tagged minus")
    roots, cp = _two_real_eigen(datum.N)
    if cp(0) != -1:
        raise ModelError(f"S- matrix must have determinant -1, got {cp(0)}")
    one = AlgebraicReal.from_rational(1)
    big = [r for r in roots if one < r]
    if len(big) != 1:
        raise ModelError("S- matrix needs eigenvalues alpha > 1 and -1/alpha")
    alpha = big[0]
    neg_inv = alg_neg(alg_reciprocal(alpha))
    if not any(r == neg_inv for r in roots):
        raise ModelError("S- eigenvalues must be alpha and -1/alpha")
    spectra = (
        (((AlgebraicReal.from_rational(1)), 1),),
        ((neg_inv, 1), (alpha, 1)),
        ((alg_reciprocal(alpha), 1), (alg_neg(alpha), 1)),
        (((AlgebraicReal.from_rational(1)), 1),),
    )
    model = FiberModel(3, EigenDescriptor(3, (1, 2, 2, 1), spectra), name="sminus")
    return model, alpha


def make_hopf() -> FiberModel:
    """S^1 x S^3 viewed as the trivial mapping torus of S^3: fiber cohomology
    dims (1, 0, 0, 1), identity actions."""
    one = AlgebraicReal.from_rational(1)
    spectra = (((one, 1),), (), (), ((one, 1),))
    return FiberModel(3, EigenDescriptor(3, (1, 0, 0, 1), spectra), name="hopf")


def make_kato(n: int):
    """Profile transformer for the n-point blow-up of the Hopf profile."""
    if n < 1:
        raise ModelError("Kato surfaces need at least one blown-up point (b_2 > 0)")
    return partial(blow_up, n=n)


# -- Lie algebra models ------------------------------------------------------

def _check(model):
    report = validate(model)
    if not report:
        raise ModelError(f"model failed validation: {report.violations}")
    return model


def s0_algebra() -> LieAlgebraModel:
    """Solvable algebra of the S0 surface, basis (A, X, Y1, Y2), parameters
    r, s; Lee covector theta = -2r * (A-dual); Tricerri form attached."""
    r, s = param("r"), param("s")
    omega = InvariantForm.from_dict(4, 2, {(0, 1): RatFunc(-1), (2, 3): RatFunc(-1)})
    model = LieAlgebraModel(
        dim=4,
        params=("r", "s"),
        brackets={
            (0, 1): {1: RatFunc(-2) * r},
            (0, 2): {2: r, 3: s},
            (0, 3): {3: r, 2: -s},
        },
        theta=(RatFunc(-2) * r, RatFunc(0), RatFunc(0), RatFunc(0)),
        J=((RatFunc(0), RatFunc(-1), RatFunc(0), RatFunc(0)),
           (RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(0)),
           (RatFunc(0), RatFunc(0), RatFunc(0), RatFunc(-1)),
           (RatFunc(0), RatFunc(0), RatFunc(1), RatFunc(0))),
        named_forms={"omega": omega},
        name="s0-algebra",
    )
    return _check(model)


def splus_algebra(a=None) -> LieAlgebraModel:
    """Solvmanifold algebra of S+/S-, basis (e1..e4), theta = e4-dual; the
    complex structure carries the real parameter a."""
    av = param("a") if a is None else RatFunc(a)
    params = ("a",) if a is None else ()
    model = LieAlgebraModel(
        dim=4,
        params=params,
        brackets={
            (1, 2): {0: RatFunc(-1)},
            (1, 3): {1: RatFunc(-1)},
            (2, 3): {2: RatFunc(1)},
        },
        theta=(RatFunc(0), RatFunc(0), RatFunc(0), RatFunc(1)),
        # columns: Je1 = e2, Je2 = -e1, Je3 = e4 - a e2, Je4 = -e3 - a e1
        J=((RatFunc(0), RatFunc(-1), RatFunc(0), -av),
           (RatFunc(1), RatFunc(0), -av, RatFunc(0)),
           (RatFunc(0), RatFunc(0), RatFunc(0), RatFunc(-1)),
           (RatFunc(0), RatFunc(0), RatFunc(1), RatFunc(0))),
        name="splus-algebra",
    )
    return _check(model)


def splus_coframe_model() -> LieAlgebraModel:
    """Orthonormal-coframe model of S+ with d f1 = f3^f1, d f2 = f4^f1,
    d f3 = 0, d f4 = f4^f3 and theta = f3; carries the harmonic generators
    zeta, tau, h and the LCK form omega = 2(f1^f2 + f3^f4)."""
    named = {
        "zeta": InvariantForm.covector(4, 0),
        "tau": InvariantForm.from_dict(4, 2, {(0, 2): RatFunc(-1)}),
        "h": InvariantForm.from_dict(4, 2, {(0, 1): RatFunc(2)}),
        "omega": InvariantForm.from_dict(4, 2, {(0, 1): RatFunc(2), (2, 3): RatFunc(2)}),
    }
    model = LieAlgebraModel(
        dim=4,
        brackets={
            (0, 2): {0: RatFunc(1)},
            (0, 3): {1: RatFunc(1)},
            (2, 3): {3: RatFunc(1)},
        },
        theta=(RatFunc(0), RatFunc(0), RatFunc(1), RatFunc(0)),
        coframe_metric=True,
        named_forms=named,
        name="splus-coframe",
    )
    return _check(model)


def sminus_note() -> str:
    return ("The S- surface is double-covered by an S+ surface, so its invariant "
            "model reuses the S+ algebra (splus_algebra); only the fiber model "
            "differs, via make_sminus.")


def ot_algebra(s: int, alpha_list=None) -> LieAlgebraModel:
    """Oeljeklaus-Toma algebra on 2s+2 generators A_1..A_s, B_1..B_s, C1, C2;
    theta is a generic combination of the A-duals with symbolic coefficients."""
    if s < 1:
        raise ModelError("OT algebras need s >= 1")
    if alpha_list is None:
        alphas = [param(f"alpha{i+1}") for i in range(s)]
        alpha_params = tuple(f"alpha{i+1}" for i in range(s))
    else:
        if len(alpha_list) != s:
            raise ModelError("alpha_list must have one entry per A generator")
        alphas = [RatFunc(a) for a in alpha_list]
        alpha_params = ()
    dim = 2 * s + 2
    c1, c2 = 2 * s, 2 * s + 1
    brackets = {}
    for i in range(s):
        brackets[(i, s + i)] = {s + i: RatFunc(1)}
        brackets[(i, c1)] = {c1: RatFunc(Fraction(-1, 2)), c2: alphas[i]}
        brackets[(i, c2)] = {c1: -alphas[i], c2: RatFunc(Fraction(-1, 2))}
    theta = [RatFunc(0)] * dim
    theta_params = tuple(f"r{i+1}" for i in range(s))
    for i in range(s):
        theta[i] = param(f"r{i+1}")
    jrows = [[RatFunc(0)] * dim for _ in range(dim)]
    for i in range(s):  # J A_i = B_i, J B_i = -A_i
        jrows[s + i][i] = RatFunc(1)
        jrows[i][s + i] = RatFunc(-1)
    jrows[c2][c1] = RatFunc(1)  # J C1 = C2
    jrows[c1][c2] = RatFunc(-1)
    model = LieAlgebraModel(
        dim=dim,
        params=alpha_params + theta_params,
        brackets=brackets,
        theta=tuple(theta),
        J=tuple(tuple(r) for r in jrows),
        name=f"ot-algebra-s{s}",
    )
    return _check(model)


def abelian_algebra(n: int = 4) -> LieAlgebraModel:
    """Abelian reference algebra; even dimensions carry the standard complex
    structure J e_{2i+1} = e_{2i+2}."""
    jmat = None
    if n % 2 == 0:
        rows = [[RatFunc(0)] * n for _ in range(n)]
        for i in range(0, n, 2):
            rows[i + 1][i] = RatFunc(1)
            rows[i][i + 1] = RatFunc(-1)
        jmat = tuple(tuple(r) for r in rows)
    return _check(LieAlgebraModel(dim=n, J=jmat, coframe_metric=True,
                                  name=f"abelian{n}"))


def default_s0():
    return make_s0(S0Datum(DEFAULT_S0_MATRIX))


def default_splus():
    return make_splus(SpmDatum(DEFAULT_SPM_MATRIX, "plus"))


def default_sminus():
    return make_sminus(SpmDatum(DEFAULT_SMINUS_MATRIX, "minus"))
