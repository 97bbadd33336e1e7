"""Command-line interface.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 domain error, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .double_sums import SplitPoly, sylv_general, sylv_nonmonic
from .errors import DomainError, InvariantViolation
from .exact import to_scalar
from .hermite import HermiteData, hermite_interpolate
from .polynomials import RootMultiset, UniPoly, format_unipoly
from .subresultants import sres_det, sres_prs
from .verify import SUITES, VerifyConfig, run_suites

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_INVARIANT = 4

# options whose values may legitimately start with "-"
_VALUE_OPTIONS = {"--p-roots", "--q-roots", "--p-coeffs", "--q-coeffs", "--nodes",
                  "--values", "--lc-p", "--lc-q"}


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    try:
        return to_scalar(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def parse_root_spec(text: str) -> RootMultiset:
    """Parse ``"r^m,r^m,..."``; ``r`` is an integer or ``num/den``, ``^m`` optional."""
    text = text.strip()
    if not text:
        return RootMultiset()
    groups = []
    for item in text.split(","):
        root, _, mult = item.strip().partition("^")
        try:
            m = int(mult) if mult else 1
        except ValueError as exc:
            raise UsageError(f"bad multiplicity in {item!r}") from exc
        if m < 1:
            raise UsageError(f"multiplicity must be positive in {item!r}")
        groups.append((parse_rational(root), m))
    try:
        return RootMultiset(groups)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def parse_rational_list(text: str) -> list[Fraction]:
    text = text.strip()
    if not text:
        return []
    return [parse_rational(t) for t in text.split(",")]


def poly_to_json(f: UniPoly) -> dict:
    return {"variable": f.var, "coeffs": [str(c) for c in f.coeffs]}


def poly_from_json(obj: dict) -> UniPoly:
    coeffs = [to_scalar(c) for c in obj["coeffs"]]
    if coeffs and coeffs[-1] == 0:
        raise ValueError("last coefficient must be nonzero")
    return UniPoly(coeffs, obj["variable"])


def dumps(obj) -> str:
    return json.dumps(obj)


def _emit_poly(f: UniPoly, as_json: bool) -> str:
    return dumps(poly_to_json(f)) if as_json else format_unipoly(f)


def cmd_doublesum(args) -> tuple[int, str]:
    P = parse_root_spec(args.p_roots)
    Q = parse_root_spec(args.q_roots)
    if args.k < 0 or args.l < 0:
        raise UsageError("k and l must be non-negative")
    if args.lc_p is not None or args.lc_q is not None:
        lc_p = parse_rational(args.lc_p) if args.lc_p is not None else Fraction(1)
        lc_q = parse_rational(args.lc_q) if args.lc_q is not None else Fraction(1)
        value = sylv_nonmonic(SplitPoly(lc_p, P), SplitPoly(lc_q, Q), args.k, args.l)
    else:
        value = sylv_general(P, Q, args.k, args.l)
    return EXIT_OK, _emit_poly(value, args.json)


def cmd_subresultant(args) -> tuple[int, str]:
    P = UniPoly(parse_rational_list(args.p_coeffs))
    Q = UniPoly(parse_rational_list(args.q_coeffs))
    if P.is_zero() or Q.is_zero() or P.degree <= Q.degree:
        raise DomainError("need nonzero P and Q with deg P > deg Q")
    p = P.degree
    if args.j is not None and not 0 <= args.j <= p - 1:
        raise DomainError(f"j must lie in 0..{p - 1}")
    wanted = [args.j] if args.j is not None else list(range(p - 1, -1, -1))
    methods = [args.method] if args.method else ["det", "prs"]
    results = {}
    for method in methods:
        if method == "det":
            results[method] = {j: sres_det(P, Q, j) for j in wanted}
        else:
            seq = sres_prs(P, Q)
            results[method] = {j: seq[j] for j in wanted}
    values = results[methods[0]]
    if len(methods) == 2 and results["det"] != results["prs"]:
        raise InvariantViolation("determinant and recursion subresultants disagree")
    if args.j is not None:
        return EXIT_OK, _emit_poly(values[args.j], args.json)
    if args.json:
        return EXIT_OK, dumps({str(j): poly_to_json(values[j]) for j in wanted})
    return EXIT_OK, "\n".join(f"{j}: {format_unipoly(values[j])}" for j in wanted)


def cmd_hermite(args) -> tuple[int, str]:
    nodes = parse_root_spec(args.nodes)
    values = parse_rational_list(args.values)
    if not len(nodes):
        raise UsageError("at least one node is required")
    if len(values) != len(nodes):
        raise UsageError(f"expected {len(nodes)} values, got {len(values)}")
    f = hermite_interpolate(HermiteData.from_flat(nodes, values))
    return EXIT_OK, _emit_poly(f, args.json)


def cmd_verify(args) -> tuple[int, str]:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from "
                         f"{', '.join(list(SUITES) + ['all'])}")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cfg = VerifyConfig(max_p=args.max_p, max_q=args.max_q, trials=args.trials, seed=args.seed)
    results = run_suites(names, cfg)
    lines = [r.line() for r in results]
    failed = [r for r in results if r.failures]
    for r in failed:
        lines.append(f"FAILED {r.name}: {r.reproducer}")
    return (EXIT_VERIFY if failed else EXIT_OK), "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doublesums",
        description="Exact Sylvester double sums, subresultants and Hermite interpolation.")
    sub = parser.add_subparsers(dest="command", required=True)

    ds = sub.add_parser("doublesum", help="Sylvester double sum Sylv^{k,l}(P, Q)")
    ds.add_argument("--p-roots", required=True, help='roots of P, e.g. "1^2,3"')
    ds.add_argument("--q-roots", required=True, help='roots of Q, e.g. "3" or ""')
    ds.add_argument("-k", type=int, required=True)
    ds.add_argument("-l", type=int, required=True)
    ds.add_argument("--lc-p", help="leading coefficient of P (default 1)")
    ds.add_argument("--lc-q", help="leading coefficient of Q (default 1)")
    ds.add_argument("--json", action="store_true")
    ds.set_defaults(func=cmd_doublesum)

    sr = sub.add_parser("subresultant", help="signed subresultants Sres_j(P, Q)")
    sr.add_argument("--p-coeffs", required=True, help="ascending coefficients of P")
    sr.add_argument("--q-coeffs", required=True, help="ascending coefficients of Q")
    which = sr.add_mutually_exclusive_group()
    which.add_argument("-j", type=int)
    which.add_argument("--all", action="store_true", help="every j from p-1 down to 0 (default)")
    sr.add_argument("--method", choices=["det", "prs"],
                    help="computation route; both are run and compared when omitted")
    sr.add_argument("--json", action="store_true")
    sr.set_defaults(func=cmd_subresultant)

    he = sub.add_parser("hermite", help="univariate Hermite interpolation")
    he.add_argument("--nodes", required=True, help='nodes with multiplicities, e.g. "1^2,4"')
    he.add_argument("--values", required=True,
                    help="normalized derivatives Q^[j](x_i) in flattened node order")
    he.add_argument("--json", action="store_true")
    he.set_defaults(func=cmd_hermite)

    ve = sub.add_parser("verify", help="run randomized identity suites")
    ve.add_argument("--suite", default="all")
    ve.add_argument("--max-p", type=int, default=5)
    ve.add_argument("--max-q", type=int, default=4)
    ve.add_argument("--trials", type=int, default=20)
    ve.add_argument("--seed", type=int, default=0)
    ve.set_defaults(func=cmd_verify)
    return parser


def _join_values(argv: list[str]) -> list[str]:
    out = []
    it = iter(argv)
    for token in it:
        if token in _VALUE_OPTIONS:
            value = next(it, None)
            out.append(token if value is None else f"{token}={value}")
        else:
            out.append(token)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        code, text = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
