"""Command-line front end.

Subcommands: ``cohomology`` (twisted Betti profile at a Lee parameter),
``scan`` (profiles at every exceptional parameter), ``verify`` (invariant
suites, JSON report) and ``cone`` (taming/LCK feasibility).  Models are
either catalog names (``s0:default``, ``s0:<rows>``, ``splus:<rows>``,
``sminus:<rows>``, ``hopf``, ``kato:<n>``, ``ot:<s>``, ``s0-algebra``,
``splus-algebra``, ``splus-coframe``, ``abelian<n>``) or paths to JSON model
files.

Exit codes: 0 success, 2 usage/parse error, 3 model validation error,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from fractions import Fraction

from .catalog import (
    S0Datum,
    SpmDatum,
    abelian_algebra,
    default_s0,
    default_sminus,
    default_splus,
    make_hopf,
    make_kato,
    make_s0,
    make_sminus,
    make_splus,
    ot_algebra,
    s0_algebra,
    splus_algebra,
    splus_coframe_model,
)
from .chevalley import LieAlgebraModel, LieModelError, twisted_ce_cohomology, validate
from .exact import AlgebraicReal, Matrix, RatFunc, alg_reciprocal, char_poly, isolate_real_roots
from .lck_cone import (
    DEFAULT_MAX_ITERS,
    DEFAULT_RESTARTS,
    FEASIBILITY_TOL,
    taming_feasibility,
)
from .mapping_torus import (
    FiberModel,
    ModelError,
    euler_char,
    exceptional_lambdas,
    lambda_to_jsonable,
    twisted_betti,
)
from .modelfile import SchemaError, load_model, parse_eigenvalue_spec

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MODEL = 3
EXIT_VERIFY = 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


class ResolvedModel:
    """A named model plus optional distinguished alpha and profile transform."""

    def __init__(self, name, model, alpha=None, transform=None):
        self.name = name
        self.model = model
        self.alpha = alpha
        self.transform = transform  # BettiProfile -> BettiProfile

    @property
    def is_fiber(self):
        return isinstance(self.model, FiberModel)


def _parse_int_rows(text, what):
    try:
        return tuple(tuple(int(x) for x in row.split(",")) for row in text.split(";"))
    except ValueError as exc:
        raise CliError(f"cannot parse {what} matrix {text!r}: rows are "
                       "semicolon-separated, entries comma-separated integers",
                       EXIT_USAGE) from exc


def resolve_model(spec: str) -> ResolvedModel:
    head, _, rest = spec.partition(":")
    if head == "s0":
        model, alpha = default_s0() if rest in ("", "default") else \
            make_s0(S0Datum(_parse_int_rows(rest, "s0")))
        return ResolvedModel(spec, model, alpha)
    if head in ("splus", "sminus"):
        maker, default, sign = ((make_splus, default_splus, "plus") if head == "splus"
                                else (make_sminus, default_sminus, "minus"))
        model, alpha = default() if rest in ("", "default") else \
            maker(SpmDatum(_parse_int_rows(rest, head), sign))
        return ResolvedModel(spec, model, alpha)
    if spec == "hopf":
        return ResolvedModel(spec, make_hopf())
    if head == "kato":
        try:
            n = int(rest)
        except ValueError as exc:
            raise CliError(f"kato needs an integer point count, got {rest!r}",
                           EXIT_USAGE) from exc
        return ResolvedModel(spec, make_hopf(), transform=make_kato(n))
    if spec == "s0-algebra":
        return ResolvedModel(spec, s0_algebra())
    if spec == "splus-algebra":
        return ResolvedModel(spec, splus_algebra())
    if spec == "splus-coframe":
        return ResolvedModel(spec, splus_coframe_model())
    m = re.fullmatch(r"abelian(\d+)", spec)
    if m:
        return ResolvedModel(spec, abelian_algebra(int(m.group(1))))
    if head == "ot":
        try:
            s = int(rest)
        except ValueError as exc:
            raise CliError(f"ot needs an integer s, got {rest!r}", EXIT_USAGE) from exc
        return ResolvedModel(spec, ot_algebra(s))
    # otherwise: a model file path
    model = load_model(spec)
    name = getattr(model, "name", "") or spec
    return ResolvedModel(name, model)


# -- Lee parameter selection -------------------------------------------------

def _parse_lambda(text) -> AlgebraicReal:
    try:
        ev, mult = parse_eigenvalue_spec(text)
    except SchemaError as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc
    if not isinstance(ev, AlgebraicReal) or mult != 1:
        raise CliError(f"{text!r} does not denote a single real value", EXIT_USAGE)
    return ev


_LOG_RE = re.compile(r"^(?:(-?\d+)\s*\*\s*)?(-?)log\(alpha\)$")


def _parse_lambda_log(text, alpha) -> AlgebraicReal:
    """lambda = e^t; only t = 0 and integer multiples of log(alpha) are exact."""
    text = text.strip()
    if text == "0":
        return AlgebraicReal.from_rational(1)
    m = _LOG_RE.match(text.replace(" ", ""))
    if not m:
        raise CliError(
            f"--lambda-log accepts 0 or <int>*log(alpha), got {text!r}; "
            "for other Lee parameters pass --lambda directly", EXIT_USAGE)
    if alpha is None:
        raise CliError("this model has no distinguished alpha for --lambda-log",
                       EXIT_USAGE)
    k = int(m.group(1) or 1)
    if m.group(2) == "-":
        k = -k
    return alg_power(alpha, k)


def alg_power(alpha: AlgebraicReal, k: int) -> AlgebraicReal:
    """alpha^k as an exact algebraic number."""
    if k == 0:
        return AlgebraicReal.from_rational(1)
    if k < 0:
        return alg_reciprocal(alg_power(alpha, -k))
    if k == 1:
        return alpha
    # alpha^k is an eigenvalue of C^k for the companion matrix C of the
    # minimal polynomial; isolate it against an interval power of alpha.
    deg = alpha.minpoly.degree
    lead = Fraction(alpha.minpoly.leading())
    monic = [Fraction(c) / lead for c in alpha.minpoly.coeffs]
    comp = [[Fraction(0)] * deg for _ in range(deg)]
    for i in range(1, deg):
        comp[i][i - 1] = Fraction(1)
    for i in range(deg):
        comp[i][deg - 1] = -monic[i]
    mat = Matrix.from_rows(comp)
    power = mat
    for _ in range(k - 1):
        power = power.matmul(mat)
    candidates = [r for r, _ in isolate_real_roots(char_poly(power))]
    width = Fraction(1, 16)
    while True:
        lo, hi = alpha.refined(width).interval
        if lo <= 0:
            lo = Fraction(0)
        plo, phi = lo ** k, hi ** k
        live = []
        for cand in candidates:
            cand = cand.refined(width)
            clo, chi = cand.interval
            if chi > plo and clo < phi:
                live.append(cand)
        if len(live) == 1:
            return live[0]
        if not live:
            raise CliError("internal error: lost the power of alpha", EXIT_MODEL)
        candidates, width = live, width / 4


def select_lambda(args, resolved) -> AlgebraicReal:
    chosen = [x for x in ("lam", "lambda_log", "at_alpha") if getattr(args, x)]
    if len(chosen) != 1:
        raise CliError("choose exactly one of --lambda, --lambda-log, --at-alpha",
                       EXIT_USAGE)
    if args.at_alpha:
        if resolved.alpha is None:
            raise CliError(f"model {resolved.name} has no distinguished alpha",
                           EXIT_USAGE)
        return resolved.alpha
    if args.lam:
        return _parse_lambda(args.lam)
    return _parse_lambda_log(args.lambda_log, resolved.alpha)


# -- subcommands -------------------------------------------------------------

def cmd_cohomology(args):
    resolved = resolve_model(args.model)
    if resolved.is_fiber:
        lam = select_lambda(args, resolved)
        profile = twisted_betti(resolved.model, lam)
        if resolved.transform is not None:
            profile = resolved.transform(profile)
        print(f"model   {resolved.name}")
        print(f"lambda  {lam.to_float():.6f}")
        print(f"b = {list(profile.betti)}")
        print(profile.to_json())
        return EXIT_OK
    if args.lam or args.lambda_log or args.at_alpha:
        raise CliError("Lie algebra models use their declared theta; "
                       "lambda selectors apply to fiber models", EXIT_USAGE)
    dims = twisted_ce_cohomology(resolved.model)
    print(f"model   {resolved.name}")
    print(f"b = {dims}")
    print(json.dumps({"model": resolved.name, "betti": dims}))
    return EXIT_OK


def cmd_scan(args):
    resolved = resolve_model(args.model)
    if not resolved.is_fiber:
        raise CliError("scan applies to fiber models", EXIT_USAGE)
    rows = []
    for lam in exceptional_lambdas(resolved.model):
        profile = twisted_betti(resolved.model, lam)
        if resolved.transform is not None:
            profile = resolved.transform(profile)
        rows.append((lam, profile))
    print(f"model   {resolved.name}")
    print(f"{'lambda':>12}  betti")
    for lam, profile in rows:
        print(f"{lam.to_float():>12.6f}  {list(profile.betti)}")
    print(json.dumps([{"lambda": lambda_to_jsonable(lam),
                       "betti": list(p.betti)} for lam, p in rows]))
    return EXIT_OK


def _verify_fiber(resolved):
    checks = []
    model = resolved.model
    lams = list(exceptional_lambdas(model))
    for q in (Fraction(2), Fraction(1, 3), Fraction(7, 5)):
        lams.append(AlgebraicReal.from_rational(q))
    pairs = []
    ok_dual = True
    for lam in lams:
        p = twisted_betti(model, lam)
        pr = twisted_betti(model, alg_reciprocal(lam))
        if resolved.transform is not None:
            p, pr = resolved.transform(p), resolved.transform(pr)
        good = tuple(reversed(p.betti)) == pr.betti
        ok_dual = ok_dual and good
        pairs.append({"lambda": lam.to_float(), "ok": good})
    checks.append({"name": "poincare_duality", "ok": ok_dual, "pairs": pairs})
    chis = set()
    for lam in lams:
        p = twisted_betti(model, lam)
        if resolved.transform is not None:
            p = resolved.transform(p)
        chis.add(euler_char(p))
    expected = 0 if resolved.transform is None else None
    ok_euler = len(chis) == 1 and (expected is None or chis == {expected})
    checks.append({"name": "euler_constant", "ok": ok_euler,
                   "values": sorted(chis)})
    if resolved.alpha is not None:
        in_exc = any(resolved.alpha == x for x in exceptional_lambdas(model))
        checks.append({"name": "alpha_exceptional", "ok": in_exc})
    return checks


def _verify_algebra(resolved):
    model = resolved.model
    report = validate(model)
    checks = [{"name": "structure_valid", "ok": bool(report),
               "violations": [list(map(str, v)) for v in report.violations]}]
    dims = twisted_ce_cohomology(model)
    chi = sum(d if k % 2 == 0 else -d for k, d in enumerate(dims))
    checks.append({"name": "twisted_euler_zero", "ok": chi == 0, "betti": dims})
    return checks


def cmd_verify(args):
    if args.all_catalog == bool(args.model):
        raise CliError("give a model or --all-catalog", EXIT_USAGE)
    if args.all_catalog:
        names = ["s0:default", "splus:default", "sminus:default", "hopf", "kato:3",
                 "s0-algebra", "splus-algebra", "splus-coframe", "ot:1", "ot:2",
                 "abelian4"]
    else:
        names = [args.model]
    reports = []
    all_ok = True
    for name in names:
        resolved = resolve_model(name)
        checks = _verify_fiber(resolved) if resolved.is_fiber \
            else _verify_algebra(resolved)
        ok = all(c["ok"] for c in checks)
        all_ok = all_ok and ok
        reports.append({"model": resolved.name, "ok": ok, "checks": checks})
        status = "pass" if ok else "FAIL"
        print(f"{resolved.name:<16} {status}")
    print(json.dumps({"ok": all_ok, "models": reports}))
    return EXIT_OK if all_ok else EXIT_VERIFY


def _instantiated_s0(invert: bool):
    """S0 algebra with r matched to the distinguished alpha (alpha = e^{2r});
    the log is a float rationalized for the cone module only.  The inverse
    parameter keeps the algebra and negates the Lee covector."""
    _, alpha = default_s0()
    r = Fraction(math.log(alpha.to_float()) / 2).limit_denominator(10 ** 9)
    model = s0_algebra().instantiate({"r": r, "s": Fraction(1)})
    theta = tuple(-c for c in model.theta) if invert else None
    return model, theta


def _parse_theta(text, model):
    if text == "zero":
        return tuple(RatFunc(0) for _ in range(model.dim))
    try:
        parts = [Fraction(p) for p in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"cannot parse theta {text!r}: use 'zero' or "
                       "comma-separated rationals", EXIT_USAGE) from exc
    if len(parts) != model.dim:
        raise CliError(f"theta needs {model.dim} coefficients", EXIT_USAGE)
    return tuple(RatFunc(p) for p in parts)


def cmd_cone(args):
    selectors = sum(bool(x) for x in (args.theta, args.at_alpha, args.at_inverse_alpha))
    if selectors > 1:
        raise CliError("choose at most one of --theta, --at-alpha, "
                       "--at-inverse-alpha", EXIT_USAGE)
    theta = None
    if args.at_alpha or args.at_inverse_alpha:
        if args.model != "s0-algebra":
            raise CliError("--at-alpha / --at-inverse-alpha apply to s0-algebra",
                           EXIT_USAGE)
        model, theta = _instantiated_s0(invert=args.at_inverse_alpha)
    else:
        resolved = resolve_model(args.model)
        if resolved.is_fiber:
            raise CliError("cone feasibility applies to Lie algebra models",
                           EXIT_USAGE)
        model = resolved.model
        if model.params:
            raise CliError(f"model {resolved.name} has free parameters "
                           f"{list(model.params)}; instantiate them in a model file",
                           EXIT_USAGE)
        if args.theta:
            theta = _parse_theta(args.theta, model)
    cert = taming_feasibility(
        model, kind=args.kind, theta=theta, tol=args.tol,
        restarts=args.restarts, max_iters=args.max_iters, seed=args.seed)
    verdict = "feasible" if cert.feasible else "infeasible (evidence, not proof)"
    print(f"kind        {cert.kind}")
    print(f"lambda_min  {cert.lambda_min:.6g}")
    print(f"verdict     {verdict}")
    print(cert.to_json())
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="novikov",
        description="Twisted cohomology of mapping tori and solvmanifold models")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohomology", help="twisted Betti profile")
    p.add_argument("model")
    p.add_argument("--lambda", dest="lam", metavar="SPEC",
                   help="rational:<p>/<q> or poly:<c0,c1,...>@(<lo>,<hi>)")
    p.add_argument("--lambda-log", dest="lambda_log", metavar="T",
                   help="Lee parameter e^T; T = 0 or <int>*log(alpha)")
    p.add_argument("--at-alpha", action="store_true")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("scan", help="profiles at every exceptional parameter")
    p.add_argument("model")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="invariant suites, JSON report")
    p.add_argument("model", nargs="?")
    p.add_argument("--all-catalog", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cone", help="taming/LCK cone feasibility")
    p.add_argument("model")
    p.add_argument("--kind", choices=("taming", "lck"), default="taming")
    p.add_argument("--theta", metavar="SPEC",
                   help="'zero' or comma-separated rational coefficients")
    p.add_argument("--at-alpha", action="store_true")
    p.add_argument("--at-inverse-alpha", action="store_true")
    p.add_argument("--tol", type=float, default=FEASIBILITY_TOL)
    p.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    p.add_argument("--max-iters", type=int, default=DEFAULT_MAX_ITERS)
    p.add_argument("--seed", type=int,
                   default=int(os.environ.get("NOVIKOV_SEED", "0")))
    p.set_defaults(func=cmd_cone)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ModelError, LieModelError) as exc:
        print(f"model error: {exc}", file=sys.stderr)
        return EXIT_MODEL


if __name__ == "__main__":
    sys.exit(main())
