"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 for usage or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import core, gensearch, identities, localglobal, unitfrac
from .errors import CoverError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _frac(q: Fraction) -> str:
    return str(q)


def _res(x: float) -> str:
    return f"{x:.2e}"


def read_system(args) -> core.CoverSystem:
    if args.inline is not None:
        return core.parse_system(args.inline.replace(";", "\n"))
    if args.file is None:
        raise _UsageError("a system file (or '-' for stdin, or --inline) is required")
    if args.file == "-":
        return core.parse_system(sys.stdin.read())
    try:
        with open(args.file) as fh:
            return core.parse_system(fh.read())
    except OSError as exc:
        raise _UsageError(str(exc)) from None


def _need_class(args, A):
    if args.cls is None:
        raise _UsageError("--class is required for this command")
    return args.cls


def cmd_analyze(args, A):
    report = core.analyze(A, args.m, cap=args.cap)
    if args.json:
        return EXIT_OK, {
            "N": report.lcm, "m": report.multiplicity, "period": report.minimal_period,
            "irredundant": sorted(report.irredundant), "table": list(report.table),
        }
    return EXIT_OK, report.lines()


def cmd_sums(args, A):
    if args.cls is None:
        sums = sorted(unitfrac.subset_sum_set(list(A.moduli)))
        if args.json:
            return EXIT_OK, {"sums": [_frac(q) for q in sums]}
        return EXIT_OK, [" ".join(_frac(q) for q in sums)]
    profile = unitfrac.subset_sum_profile(A, args.cls)
    if args.json:
        return EXIT_OK, {"modulus": profile.modulus, "rows": [
            {"r": r, "floors": sorted(row.floors), "count": row.count}
            for r, row in sorted(profile.rows.items())]}
    return EXIT_OK, profile.lines()


def cmd_theorem1(args, A):
    t = _need_class(args, A)
    m = args.m if args.m is not None else core.covering_multiplicity(A, args.cap)
    rows = unitfrac.theorem1_check(A, m, t)
    code = EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL
    if args.json:
        return code, {"m": m, "class": t, "rows": [
            {"r": r.r, "floors": list(r.floors), "size": r.size, "pass": r.passed}
            for r in rows]}
    return code, [
        f"r={r.r} floors={list(r.floors)} size={r.size} {'PASS' if r.passed else 'FAIL'}"
        for r in rows
    ]


def cmd_exactbound(args, A):
    m = args.m if args.m is not None else core.covering_multiplicity(A, args.cap)
    rows = unitfrac.exact_cover_bound_check(A, m, args.cls)
    code = EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL
    if args.json:
        return code, {"m": m, "rows": [
            {"a": r.a, "count": r.count, "bound": r.bound, "pass": r.passed} for r in rows]}
    return code, [f"a={r.a} count={r.count} bound={r.bound} {'PASS' if r.passed else 'FAIL'}"
                  for r in rows]


def cmd_corollary1(args, A):
    D = [int(d) for d in args.D.split(",") if d.strip()] if args.D else []
    missing = unitfrac.corollary1_missing(A, D, args.period)
    code = EXIT_FAIL if missing else EXIT_OK
    if args.json:
        return code, {"holds": not missing, "missing": [_frac(q) for q in missing]}
    if missing:
        return code, ["FAIL missing=" + ",".join(_frac(q) for q in missing)]
    return code, ["PASS"]


def cmd_identities(args, A):
    tol = args.tol
    m = args.m if args.m is not None else core.covering_multiplicity(A, args.cap)
    results = []
    results.append(("average", 0.0 if identities.average_equality_check(A, args.cap) else 1.0))

    # Lemma 1 with the proof's polynomial (sum x_s / n_s)^m(A), swept over a period
    N = core.lcm_moduli(A)
    mult = core.covering_multiplicity(A, args.cap)
    f = identities.SparsePolynomial.linear([1 / n for n in A.moduli]) ** mult
    ones = [1] * len(A)
    results.append(("lemma1", max(identities.lemma1_residual(A, ones, f, z)
                                  for z in range(N))))
    if args.cls is not None:
        t = args.cls
        results.append(("lemma2", identities.lemma2_residual(A, m, t, [1] * (len(A) - 1))))
        n_t = A[t].n
        results.append(("lemma3", max(identities.lemma3_residual(A, m, t, A[t].a + j * n_t)
                                      for j in range(2))))
        results.append(("product", identities.product_identity_residual(A, t)))

    code = EXIT_OK if all(r <= tol for _, r in results) else EXIT_FAIL
    verdict = lambda r: "PASS" if r <= tol else "FAIL"  # noqa: E731
    if args.json:
        return code, [[name, r, verdict(r)] for name, r in results]
    return code, [f"{verdict(r)} {name} max_residual={_res(r)}" for name, r in results]


def cmd_localglobal(args, A):
    m = args.m if args.m is not None else 1
    cover = localglobal.check_local_global_cover(A, m, args.x0, args.cap)
    exact = localglobal.check_local_global_exact(A, m, args.x0, args.cap)
    ok = cover.consistent and exact.consistent
    code = EXIT_OK if ok else EXIT_FAIL
    if args.json:
        return code, {name: vars(v) for name, v in (("cover", cover), ("exact", exact))}
    return code, [
        f"{name}: bound={v.window_length} window=[{v.window_start},"
        f"{v.window_start + v.window_length - 1}] local={v.local_holds} "
        f"global={v.global_holds}"
        for name, v in (("cover", cover), ("exact", exact))
    ]


def cmd_generate(args):
    A = gensearch.random_system(args.k, args.max_modulus, args.seed)
    if args.cover is not None:
        A = gensearch.complete_to_cover(A, args.cover, args.cap)
    return EXIT_OK, A.to_text().splitlines()


def cmd_search(args):
    spec = gensearch.SearchSpec(tuple(args.moduli), args.m or 1, args.exact)
    found = gensearch.find_covers(spec, args.cap)
    if args.json:
        return EXIT_OK, {"count": len(found), "residues": [list(r) for r in found]}
    lines = []
    for i, residues in enumerate(found, start=1):
        lines.append(f"# solution {i}")
        lines.extend(f"{a} mod {n}" for a, n in zip(residues, spec.moduli))
        lines.append("")
    lines.append(f"# {len(found)} solutions")
    return EXIT_OK, lines


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coverfrac", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_system(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", nargs="?", help="system file in 'a mod n' lines, '-' for stdin")
        p.add_argument("--inline", help="system given inline, classes separated by ';'")
        p.add_argument("--m", type=int, help="target multiplicity (default: m(A))")
        p.add_argument("--class", dest="cls", type=int, help="distinguished class index (1-based)")
        p.add_argument("--tol", type=float, default=identities.DEFAULT_TOL,
                       help="relative tolerance (default 1e-9)")
        p.add_argument("--cap", type=int, default=core.DEFAULT_TABLE_CAP,
                       help="cap on N_A (default 10^7)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    with_system("analyze", "lcm, covering table, multiplicity, period, irredundant classes")
    with_system("sums", "subset sums of 1/n_s, or the profile for --class")
    with_system("theorem1", "floor counts per fractional class r/n_t")
    with_system("exactbound", "subset counts against the binomial bound (exact covers)")
    p = with_system("corollary1", "fractional parts with floors outside D")
    p.add_argument("--D", help="comma-separated integers (size must equal m(A))")
    p.add_argument("--period", type=int, help="period n_0 (default: minimal period)")
    with_system("identities", "numerical identity checks")
    p = with_system("localglobal", "window criteria for m-covers and exact m-covers")
    p.add_argument("--x0", type=int, default=0, help="window start (default 0)")

    p = sub.add_parser("generate", help="seeded random system")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-modulus", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cover", type=int, help="complete to an m-cover with classes mod N_A")
    p.add_argument("--cap", type=int, default=core.DEFAULT_TABLE_CAP)

    p = sub.add_parser("search", help="all residue assignments giving an m-cover")
    p.add_argument("moduli", type=int, nargs="+")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--cap", type=int, default=gensearch.DEFAULT_SEARCH_CAP)
    p.add_argument("--json", action="store_true")
    return parser


_SYSTEM_COMMANDS = {
    "analyze": cmd_analyze,
    "sums": cmd_sums,
    "theorem1": cmd_theorem1,
    "exactbound": cmd_exactbound,
    "corollary1": cmd_corollary1,
    "identities": cmd_identities,
    "localglobal": cmd_localglobal,
}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "generate":
            code, payload = cmd_generate(args)
        elif args.command == "search":
            code, payload = cmd_search(args)
        else:
            A = read_system(args)
            code, payload = _SYSTEM_COMMANDS[args.command](args, A)
    except _UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except CoverError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    if isinstance(payload, (dict, list)) and getattr(args, "json", False):
        print(json.dumps(payload), file=out)
    else:
        for line in payload:
            print(line, file=out)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
