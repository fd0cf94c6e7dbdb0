"""Command-line front end.

Exit codes: 0 when every result agrees with the proved statements, 1 when a
result contradicts one (a bug in the arithmetic), 2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict
from pathlib import Path

from kpq import diokit, fieldcase, kernels, quadforms, tabulate
from kpq.fieldcase import ConsistencyError, SizeViolation
from kpq.intarith import is_prime, is_square

log = logging.getLogger("kpq")

EXIT_OK, EXIT_CONTRADICTION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _case_dict(case) -> dict:
    return {"p": case.p, "q": case.q, "n": case.n, "v": case.v, "m": case.m, "d": case.d, "D": case.D}


def _human(payload, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for key, val in payload.items():
            if isinstance(val, (dict, list)) and val:
                lines.append(f"{pad}{key}:")
                lines.append(_human(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, dict):
                lines.append(pad + ", ".join(f"{k}={_scalar(v)}" for k, v in item.items()))
            else:
                lines.append(pad + _scalar(item))
    else:
        lines.append(pad + _scalar(payload))
    return "\n".join(lines)


def _scalar(val) -> str:
    if val is None:
        return "-"
    if isinstance(val, (list, tuple)):
        return "(" + ", ".join(_scalar(v) for v in val) + ")"
    return str(val)


def _emit(args, payload) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(_human(payload) + "\n")


# -- verbs -------------------------------------------------------------------

def cmd_check(args) -> int:
    case = fieldcase.build_case(args.p, args.q, args.n)
    report = fieldcase.check_conditions(case)
    result = fieldcase.verify(case, report)
    payload = {
        "verb": "check",
        "case": _case_dict(case),
        "conditions": asdict(report),
        "verification": asdict(result),
        "consistent": result.consistent,
    }
    _emit(args, payload)
    return EXIT_OK if result.consistent else EXIT_CONTRADICTION


def cmd_table(args) -> int:
    rows = tabulate.generate_table(args.n, args.pmax, args.range)
    text = tabulate.render_csv(rows) if args.format == "csv" else tabulate.render_json(rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
        log.info("wrote %d rows to %s", len(rows), args.out)
    else:
        sys.stdout.write(text)
    bad = [(r.p, r.q) for r in rows
           if r.verdict == fieldcase.PASS and (r.h % r.n or r.order_p != r.n)]
    for p, q in bad:
        print(f"contradiction: passing row (p, q) = ({p}, {q}) misses n | h or order n", file=sys.stderr)
    return EXIT_CONTRADICTION if bad else EXIT_OK


def cmd_order(args) -> int:
    case = fieldcase.build_case(args.p, args.q, args.n)
    report = fieldcase.check_conditions(case)
    h = quadforms.class_count(case.D)
    form = quadforms.prime_form(case.D, case.p)
    order = quadforms.form_order(form, limit=h)
    payload = {
        "verb": "order",
        "case": _case_dict(case),
        "verdict": report.verdict,
        "prime_form": list(form),
        "h": h,
        "order": order,
    }
    _emit(args, payload)
    return EXIT_CONTRADICTION if report.passed and order != case.n else EXIT_OK


def _prime_divisors(n: int) -> list[int]:
    return [ell for ell in range(3, n + 1, 2) if n % ell == 0 and is_prime(ell)]


def cmd_prop2(args) -> int:
    case = fieldcase.build_case(args.p, args.q, args.n)
    report = fieldcase.check_conditions(case)
    ells = [args.ell] if args.ell is not None else _prime_divisors(case.n)
    results, status = [], EXIT_OK
    for ell in ells:
        root = diokit.prop2_find_root(case, ell)
        entry = {"ell": ell, "root": None, "verified": None}
        if root is not None:
            entry["root"] = {"a": root.a, "b": root.b, "halved": root.halved}
            entry["verified"] = root.power(case.d, ell) == case.alpha
            if report.passed or not entry["verified"]:
                status = EXIT_CONTRADICTION
        results.append(entry)
    _emit(args, {"verb": "prop2", "case": _case_dict(case), "verdict": report.verdict,
                 "marker": report.marker, "results": results})
    return status


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def cmd_prop1(args) -> int:
    if args.abmax < 1:
        raise UsageError("--abmax must be positive")
    ds = [d for d in range(args.dmin, args.dmax + 1)
          if d % 8 == 5 and not (d >= 0 and is_square(d))]
    odd = [x for x in range(-args.abmax, args.abmax + 1) if x % 2]
    summary, status = [], EXIT_OK
    for ell in args.ells:
        tested = members = 0
        for d in ds:
            for a in odd:
                for b in odd:
                    tested += 1
                    members += diokit.prop1_member(d, a, b, ell)
        expected = tested if ell == 3 else 0
        ok = members == expected
        if not ok:
            status = EXIT_CONTRADICTION
        summary.append({"ell": ell, "tested": tested, "members": members,
                        "fraction": members / tested if tested else None, "consistent": ok})
    _emit(args, {"verb": "prop1", "d_values": len(ds), "results": summary})
    return status


def _bs_dict(res: diokit.BSSolutionSet) -> dict:
    inst = res.instance
    return {
        "lambda2": inst.lam2, "D1": inst.D1, "D2": inst.D2, "p": inst.p, "y_max": inst.y_max,
        "solutions": [list(s) for s in res.solutions],
        "in_E": res.in_E, "in_F": res.in_F, "in_G": res.in_G, "in_H": res.in_H.member,
        "H_witness": list(res.in_H.witness) if res.in_H.witness else None,
        "verdict": diokit.bs_consistency(res),
    }


def cmd_bs(args) -> int:
    inst = diokit.BSInstance(args.lambda2, args.d1, args.d2, args.p, args.ymax)
    res = diokit.count_bs_solutions(inst)
    payload = {"verb": "bs", **_bs_dict(res)}
    _emit(args, payload)
    return EXIT_OK if payload["verdict"] == "OK" else EXIT_CONTRADICTION


def cmd_bs_sweep(args) -> int:
    found = diokit.bs_sweep(args.d1max, args.d2max, args.pmax, args.ymax)
    entries = [_bs_dict(r) for r in found]
    unexplained = sum(e["verdict"] != "OK" for e in entries)
    _emit(args, {"verb": "bs-sweep", "multi_solution": len(entries),
                 "unexplained": unexplained, "instances": entries})
    return EXIT_CONTRADICTION if unexplained else EXIT_OK


def cmd_cohn(args) -> int:
    squares = diokit.cohn_scan(args.kmax)
    expected = [s for s in [(1, 1), (3, 4)] if s[0] <= args.kmax]
    ok = squares == expected
    _emit(args, {"verb": "cohn", "k_max": args.kmax, "squares": [list(s) for s in squares],
                 "consistent": ok})
    return EXIT_OK if ok else EXIT_CONTRADICTION


def cmd_ljunggren(args) -> int:
    sols = diokit.ljunggren_scan(args.xmax, args.nmax)
    expected = [(3, 5, 11)] if args.xmax >= 3 and args.nmax >= 5 else []
    ok = sols == expected
    _emit(args, {"verb": "ljunggren", "x_max": args.xmax, "n_max": args.nmax,
                 "solutions": [list(s) for s in sols], "consistent": ok})
    return EXIT_OK if ok else EXIT_CONTRADICTION


def cmd_theorem4(args) -> int:
    cases = []
    for p, n in fieldcase.theorem4_pairs(args.pnmax):
        case, res = fieldcase.theorem4_case(p, n)
        log.debug("theorem4 p=%d n=%d D=%d h=%d", p, n, case.D, res.h)
        cases.append({"p": p, "n": n, "v": case.v, "m": case.m, "d": case.d, "D": case.D,
                      "h": res.h, "divisible": res.divisible})
    failures = [[c["p"], c["n"]] for c in cases if not c["divisible"]]
    expected = [[3, 5]] if 3**5 <= args.pnmax else []
    ok = failures == expected
    _emit(args, {"verb": "theorem4", "pn_max": args.pnmax, "count": len(cases),
                 "non_divisible": failures, "consistent": ok, "cases": cases})
    return EXIT_OK if ok else EXIT_CONTRADICTION


def cmd_scan_t2(args) -> int:
    scan = fieldcase.scan_theorem2(args.q, args.n, args.pmax)
    _emit(args, {"verb": "scan-t2", "q": scan.q, "n": scan.n, "p_max": scan.p_max,
                 "scanned": scan.scanned, "distinct_d": scan.distinct_d,
                 "failures": [{"p": p, "d": d} for p, d in scan.failures],
                 "consistent": scan.bound_holds})
    return EXIT_OK if scan.bound_holds else EXIT_CONTRADICTION


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpq", description="Class-number divisibility checks for Q(sqrt(q^2 - p^n)).")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="diagnostics on stderr (-v info, -vv debug)")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, func, help_, formats=("json", "human"), default="json"):
        p = sub.add_parser(name, help=help_, description=help_)
        p.add_argument("--format", choices=formats, default=default)
        p.set_defaults(func=func)
        return p

    def pqn(p):
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--n", type=int, required=True)

    pqn(verb("check", cmd_check, "hypotheses, class number and prime-form order for one case"))
    p = verb("table", cmd_table, "tabulate K_{p,q} for fixed n", formats=("csv", "json"), default="csv")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--range", choices=[q.value for q in tabulate.QPolicy], default="all")
    p.add_argument("--out", help="write to this file instead of stdout")
    pqn(verb("order", cmd_order, "order of the prime form above p"))
    p = verb("prop2", cmd_prop2, "search for an l-th root of q + m sqrt(d)")
    pqn(p)
    p.add_argument("--ell", type=int)
    p = verb("prop1", cmd_prop1, "sweep ((a + b sqrt d)/2)^l over d = 5 mod 8")
    p.add_argument("--dmin", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--abmax", type=int, required=True)
    p.add_argument("--ells", type=_int_list, default=[3, 5, 7, 11])
    p = verb("bs", cmd_bs, "solutions of D1 x^2 + D2 = lambda^2 p^y")
    p.add_argument("--lambda2", type=int, required=True, choices=diokit.LAMBDA_SQUARES)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--ymax", type=int, default=40)
    p = verb("bs-sweep", cmd_bs_sweep, "all multi-solution instances in a box")
    p.add_argument("--d1max", type=int, required=True)
    p.add_argument("--d2max", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--ymax", type=int, default=40)
    p = verb("cohn", cmd_cohn, "perfect squares among Lucas numbers L_0..L_kmax")
    p.add_argument("--kmax", type=int, required=True)
    p = verb("ljunggren", cmd_ljunggren, "squares among (x^n - 1)/(x - 1), odd n")
    p.add_argument("--xmax", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p = verb("theorem4", cmd_theorem4, "divisibility of h(1 - p^n) for all p^n <= pnmax")
    p.add_argument("--pnmax", type=int, required=True)
    p = verb("scan-t2", cmd_scan_t2, "star-condition failures for fixed q, n")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)],
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    log.debug("kernel backend: %s", kernels.BACKEND)
    try:
        return args.func(args)
    except SizeViolation as exc:
        print(f"kpq {args.verb}: size violation: q² ≥ pⁿ "
              f"({exc.q}² = {exc.q ** 2} ≥ {exc.p ** exc.n} = {exc.p}^{exc.n})", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError, OverflowError) as exc:
        print(f"kpq {args.verb}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"kpq {args.verb}: contradiction: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION


def main() -> None:
    sys.exit(run())
