"""Command-line front end.

Exit status: 0 on success, 1 on usage or parse errors, 2 on a mathematical
failure (Jacobi violation, divergent limit, violated inequality).
"""

from __future__ import annotations

import argparse
import sys

from . import __version__, catalog
from .cli_formats import (
    ParseError,
    algebra_to_dict,
    digest,
    dump_algebra,
    dump_report,
    family_to_dict,
    load_algebra,
    load_family,
)
from .contraction import (
    DEFAULT_EPS_SAMPLES,
    DivergentLimit,
    apply_family,
    contract_limit,
    contraction_necessary_condition,
    semicontinuity_check,
    verify_monotonicity,
)
from .invariants import (
    CERTIFY_MAX_DIM,
    DEFAULT_BOUND,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    functional_independence_check,
    invariant_count,
    polynomial_invariants,
)
from .lie_core import jacobi_check

EXIT_OK, EXIT_USAGE, EXIT_MATH = 0, 1, 2


class _Fail(Exception):
    def __init__(self, code, report):
        self.code = code
        self.report = report


def _fstr(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _base(command, **extra):
    return {"command": command, "version": __version__, **extra}


def _load_checked(path, report, key="algebra"):
    L = load_algebra(path)
    report.setdefault("inputs", {})[key] = {"path": str(path), "digest": digest(path), "dim": L.dim}
    bad = jacobi_check(L)
    if bad:
        report["jacobi"] = _violations(L, bad)
        report["ok"] = False
        raise _Fail(EXIT_MATH, report)
    return L


def _violations(L, bad):
    return [
        {
            "triple": [t + 1 for t in v.triple],
            "labels": [L.basis_labels[t] for t in v.triple],
            "residual": [_fstr(c) for c in v.residual],
        }
        for v in bad
    ]


def _certify_flag(args, dim):
    if args.certify is None:
        if dim > CERTIFY_MAX_DIM:
            print(
                f"warning: dimension {dim} > {CERTIFY_MAX_DIM}; rank is sampled, not certified "
                "(pass --certify to force symbolic elimination)",
                file=sys.stderr,
            )
            return False
        return True
    return args.certify


def _count_dict(rep):
    return {
        "n": rep.dim,
        "rank": rep.generic_rank,
        "N": rep.invariant_count,
        "certified": rep.rank_certified,
        "sampled_rank": rep.sampled_rank,
        "center_dim": rep.center_dim,
    }


def _sampling(args):
    return {"trials": args.trials, "bound": args.bound, "seed": args.seed}


def cmd_check(args):
    report = _base("check")
    L = load_algebra(args.algebra)
    report["inputs"] = {"algebra": {"path": args.algebra, "digest": digest(args.algebra), "dim": L.dim}}
    bad = jacobi_check(L)
    report["jacobi"] = _violations(L, bad)
    report["ok"] = not bad
    return (EXIT_OK if not bad else EXIT_MATH), report


def cmd_count(args):
    report = _base("count", sampling=_sampling(args))
    L = _load_checked(args.algebra, report)
    rep = invariant_count(L, args.trials, args.bound, _certify_flag(args, L.dim), args.seed)
    report.update(_count_dict(rep))
    report["ok"] = True
    return EXIT_OK, report


def cmd_invariants(args):
    if args.max_degree < 1:
        raise _Fail(EXIT_USAGE, _base("invariants", error="--max-degree must be at least 1"))
    report = _base("invariants", max_degree=args.max_degree, sampling=_sampling(args))
    L = _load_checked(args.algebra, report)
    polys = polynomial_invariants(L, args.max_degree)
    names = list(L.basis_labels) if args.labels else None
    report["invariants"] = [p.to_string(names) for p in polys]
    report["independence_lower_bound"] = functional_independence_check(
        polys, args.trials, args.bound, args.seed
    ) if polys else 0
    report["ok"] = True
    return EXIT_OK, report


def cmd_contract(args):
    report = _base("contract", sampling=_sampling(args))
    L0 = _load_checked(args.algebra, report)
    fam = load_family(args.family, L0.dim)
    report["inputs"]["family"] = {"path": args.family, "digest": digest(args.family), **family_to_dict(fam)}
    c_eps = apply_family(L0, fam)
    try:
        L1 = contract_limit(c_eps)
    except DivergentLimit as exc:
        i, j, k = exc.where
        report["ok"] = False
        report["divergent"] = {"i": i + 1, "j": j + 1, "k": k + 1, "value": str(exc.value)}
        raise _Fail(EXIT_MATH, report) from None
    report["limit"] = algebra_to_dict(L1)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(dump_algebra(L1))
        report["emitted"] = args.emit
    certify = _certify_flag(args, L0.dim)
    mono = verify_monotonicity(L0, L1, args.trials, args.bound, certify, args.seed)
    report["monotonicity"] = {
        "N0": mono.n0, "N1": mono.n1, "rank0": mono.rank0, "rank1": mono.rank1,
        "certified": mono.certified, "holds": mono.holds,
    }
    ok = mono.holds
    if args.check_semicontinuity:
        semi = semicontinuity_check(
            c_eps, L1, DEFAULT_EPS_SAMPLES, args.trials, args.bound, certify, args.seed
        )
        report["semicontinuity"] = {
            "rank_limit": semi.rank_limit,
            "holds": semi.holds,
            "samples": [
                {"eps": _fstr(s.eps), "rank": s.rank_at_eps, "holds": s.holds, "note": s.note}
                for s in semi.samples
            ],
        }
        ok = ok and semi.holds
    report["ok"] = ok
    return (EXIT_OK if ok else EXIT_MATH), report


def cmd_rule_out(args):
    report = _base("rule-out", sampling=_sampling(args))
    L0 = _load_checked(args.algebra0, report, "algebra0")
    L1 = _load_checked(args.algebra1, report, "algebra1")
    opts = dict(trials=args.trials, bound=args.bound, seed=args.seed,
                certify=_certify_flag(args, max(L0.dim, L1.dim)))
    verdict = contraction_necessary_condition(L0, L1, **opts)
    if L0.dim == L1.dim:
        report["N0"] = invariant_count(L0, **opts).invariant_count
        report["N1"] = invariant_count(L1, **opts).invariant_count
    report["verdict"] = str(verdict)
    report["ok"] = True
    return EXIT_OK, report


def cmd_catalog(args):
    if args.name is None:
        lines = [f"{e.name} ({e.nparams} param): {e.summary}" for e in catalog.CATALOG.values()]
        print("\n".join(lines))
        return EXIT_OK, None
    try:
        L = catalog.build(args.name, *args.params)
    except KeyError as exc:
        raise _Fail(EXIT_USAGE, _base("catalog", ok=False, error=exc.args[0])) from None
    except ValueError as exc:
        raise _Fail(EXIT_USAGE, _base("catalog", ok=False, error=str(exc))) from None
    text = dump_algebra(L)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK, None


def _add_sampling(p):
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="random evaluation points")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="coordinates drawn from [-bound, bound]")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument(
        "--certify", action=argparse.BooleanOptionalAction, default=None,
        help=f"symbolic rank certification (default: on for dim <= {CERTIFY_MAX_DIM})",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="liecasimir",
        description="Invariant counts and contractions of Lie algebras over Q.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="parse an algebra file and check the Jacobi identity")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("count", help="number of functionally independent invariants")
    p.add_argument("algebra")
    _add_sampling(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("invariants", help="polynomial invariants up to a degree")
    p.add_argument("algebra")
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--labels", action="store_true", help="print with basis labels instead of x1..xn")
    _add_sampling(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("contract", help="apply a family and take the e -> 0 limit")
    p.add_argument("algebra")
    p.add_argument("family")
    p.add_argument("--emit", metavar="PATH", help="write the limit algebra file")
    p.add_argument("--check-semicontinuity", action="store_true")
    _add_sampling(p)
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("rule-out", help="necessary condition for algebra1 to be a contraction of algebra0")
    p.add_argument("algebra0")
    p.add_argument("algebra1")
    _add_sampling(p)
    p.set_defaults(func=cmd_rule_out)

    p = sub.add_parser("catalog", help="emit a built-in algebra (no name: list entries)")
    p.add_argument("name", nargs="?")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--emit", metavar="PATH")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        code, report = args.func(args)
    except _Fail as fail:
        code, report = fail.code, fail.report
    except ParseError as exc:
        code = EXIT_USAGE
        report = _base(args.command, ok=False, error=str(exc), location=exc.location)
    except (ValueError, OSError) as exc:
        code = EXIT_USAGE
        report = _base(args.command, ok=False, error=str(exc))
    if report is not None:
        sys.stdout.write(dump_report(report))
        if code and "error" in report:
            print(f"error: {report['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
