"""
Command-line front end.

    qcat compute FAMILY N [K]      one polynomial
    qcat table FAMILY N_MAX        rows n = 0..N_MAX
    qcat verify [NAME ... | all]   run identity checks

Exit codes: 0 success, 1 a check failed, 2 bad usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable

from . import checks, genfun, paths, permstats, polyomino
from .config import BoundExceeded, oracle_bound
from .polyarith import ABT, QTX, Context, MultiPoly

_X1 = {2: MultiPoly.const(1)}


# family -> (function(n, bound) -> poly, context); signed and narayana ignore the bound
FAMILIES: dict[str, tuple[Callable[[int, int], MultiPoly], Context]] = {
    "I": (lambda n, b: permstats.brute_I(n, b).subst(_X1), QTX),
    "Iqtx": (lambda n, b: permstats.brute_I(n, b), QTX),
    "M": (lambda n, b: permstats.brute_M(n, b), QTX),
    "C": (lambda n, b: paths.brute_C(n, b), ABT),
    "P": (lambda n, b: polyomino.P_poly(n, b), QTX),
    "signed": (lambda n, b: genfun.signed_rec(n), QTX),
    "narayana": (lambda n, b: genfun.narayana_poly(n), QTX),
}
FAMILY_NAMES = sorted([*FAMILIES, "A"])


class UsageError(Exception):
    pass


def _poly(family: str, n: int, k: int | None, bound: int) -> MultiPoly:
    if n < 0:
        raise UsageError("n must be nonnegative")
    if family == "A":
        if k is None:
            raise UsageError("family A needs k")
        if not 0 <= k:
            raise UsageError("k must be nonnegative")
        return permstats.brute_A(n, k, bound)
    if k is not None:
        raise UsageError(f"family {family} takes no k")
    fn, _ = FAMILIES[family]
    return fn(n, bound)


def _context(family: str) -> Context:
    return QTX if family == "A" else FAMILIES[family][1]


def _shape(p: MultiPoly) -> dict:
    """Coefficient list and shape flags of a polynomial in q."""
    if p.is_zero():
        return {"coefficients": [], "min_degree": None, "symmetric": True,
                "unimodal": True, "log_concave": True}
    r, cs = p.univariate_coeffs(0)
    return {"coefficients": cs, "min_degree": r, "symmetric": p.is_symmetric_in(0),
            "unimodal": p.is_unimodal(0), "log_concave": p.is_log_concave(0)}


def _csv_rows(p: MultiPoly, ctx: Context) -> tuple[list[str], list[list]]:
    header = [v for v in ctx.names if v is not None] + ["coef"]
    width = len(header) - 1
    return header, [[*e[:width], c] for e, c in p.terms]


def cmd_compute(family: str, n: int, k: int | None, fmt: str, bound: int) -> str:
    p = _poly(family, n, k, bound)
    ctx = _context(family)
    if fmt == "json":
        obj = {"family": family, "n": n, "context": [v for v in ctx.names if v], "terms": p.to_json_obj()}
        if k is not None:
            obj["k"] = k
        if family == "A":
            obj.update(_shape(p))
        return json.dumps(obj, sort_keys=True)
    if fmt == "csv":
        header, rows = _csv_rows(p, ctx)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    out = p.render(ctx)
    if family == "A":
        s = _shape(p)
        yes = {True: "yes", False: "no"}
        out += (f"\ncoefficients: {s['coefficients']} (from q^{s['min_degree']})"
                f"\nsymmetric: {yes[s['symmetric']]}  unimodal: {yes[s['unimodal']]}"
                f"  log-concave: {yes[s['log_concave']]}")
    return out


def _table_rows(family: str, n_max: int, bound: int):
    for n in range(n_max + 1):
        if family == "A":
            for k in range(max(n, 1)):
                yield (n, k), _poly("A", n, k, bound)
        else:
            yield (n,), _poly(family, n, None, bound)


def cmd_table(family: str, n_max: int, fmt: str, bound: int) -> str:
    if n_max < 0:
        raise UsageError("n_max must be nonnegative")
    rows = list(_table_rows(family, n_max, bound))
    ctx = _context(family)
    keys = ["n", "k"] if family == "A" else ["n"]
    if fmt == "text":
        if family == "A":
            return "\n".join(f"A({n},{k}) = {p.render(ctx)}" for (n, k), p in rows)
        return "\n".join(p.render(ctx) for _, p in rows)
    exps = sorted({e for _, p in rows for e, _ in p.items()})
    coef = [dict(p.items()) for _, p in rows]
    if fmt == "json":
        return json.dumps({
            "family": family,
            "context": [v for v in ctx.names if v],
            "columns": [list(e) for e in exps],
            "rows": [{**dict(zip(keys, key)), "coefs": [str(c.get(e, 0)) for e in exps]}
                     for (key, _), c in zip(rows, coef)],
        }, sort_keys=True)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(keys + [MultiPoly.monomial(e).render(ctx) for e in exps])
    for (key, _), c in zip(rows, coef):
        w.writerow([*key, *(c.get(e, 0) for e in exps)])
    return buf.getvalue().rstrip("\n")


def cmd_verify(names: list[str], fmt: str, max_n: int | None, jobs: int) -> tuple[str, int]:
    if not names or names == ["all"]:
        names = checks.check_names()
    unknown = [n for n in names if n not in checks.CHECKS]
    if unknown:
        raise UsageError(f"unknown check(s) {', '.join(unknown)}; choose from all, "
                         + ", ".join(checks.check_names()))
    results = checks.run_checks(names, max_n, jobs)
    code = 0 if all(r.passed for r in results) else 1
    if fmt == "json":
        from dataclasses import asdict
        return json.dumps([asdict(r) for r in results], sort_keys=True), code
    lines = []
    for r in results:
        line = f"{r.status.upper()}  {r.name}  (n <= {r.max_n})"
        if r.counterexample is not None:
            line += "  " + json.dumps(r.counterexample, sort_keys=True)
        lines.append(line)
    return "\n".join(lines), code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--max-n", type=int, default=None,
                        help="bound for exhaustive enumeration (default: QCAT_MAX_N or 12)")

    p = _Parser(prog="qcat", description="Statistics and identity checks for 321-avoiding permutations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", parents=[common], help="print one polynomial")
    c.add_argument("family", choices=FAMILY_NAMES)
    c.add_argument("n", type=int)
    c.add_argument("k", type=int, nargs="?")

    t = sub.add_parser("table", parents=[common], help="print rows n = 0..N_MAX")
    t.add_argument("family", choices=FAMILY_NAMES)
    t.add_argument("n_max", type=int)

    v = sub.add_parser("verify", parents=[common], help="run identity checks")
    v.add_argument("names", nargs="*", metavar="NAME", help="check names or 'all' (default)")
    v.add_argument("--check", action="append", default=[], metavar="NAME")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.add_argument("--list", action="store_true", help="list the checks and exit")
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.max_n is not None and args.max_n < 0:
            raise UsageError("--max-n must be nonnegative")
        bound = args.max_n if args.max_n is not None else oracle_bound()
        code = 0
        if args.command == "compute":
            out = cmd_compute(args.family, args.n, args.k, args.format, bound)
        elif args.command == "table":
            out = cmd_table(args.family, args.n_max, args.format, bound)
        elif args.list:
            out = "\n".join(f"{name}  (n <= {checks.CHECKS[name][0]})  {checks.CHECKS[name][2]}"
                            for name in checks.check_names())
        else:
            if args.format == "csv":
                raise UsageError("verify supports text and json output")
            out, code = cmd_verify(args.names + args.check, args.format, args.max_n, args.jobs)
    except (UsageError, BoundExceeded, ValueError) as e:
        print(f"qcat: error: {e}", file=sys.stderr)
        return 2
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
