"""Command line interface.

Exit codes: 0 success, 1 verification failed, 2 bad input or size guard,
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .exactalg import char_poly, critical_alphas, format_rational, generic_rank, rank_at
from .jacobi import G, hahn_identity_check, heun_residual, unit_circle_roots
from .spherical import gcp, trace_crosscheck
from .symgrp import SizeGuardError, as_partition, content_poly, kostka, partitions
from .tensormod import ConsistencyError, conjecture_check, decompose, transition_matrix
from .verify import SUITES, run_suite


class UsageError(ValueError):
    pass


def parse_alpha(text: str) -> Fraction | None:
    if text == "generic":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"alpha must be an exact rational like 1/7, got {text!r}")


def parse_partition(text: str) -> tuple[int, ...]:
    try:
        return as_partition([int(x) for x in text.replace(" ", "").split(",") if x])
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}")


def cmd_decompose(args) -> tuple[int, object]:
    report = decompose(args.n, args.l, parse_alpha(args.alpha))
    return 0, report


def _transition_payload(args) -> dict:
    lam = parse_partition(args.lam)
    F = transition_matrix(lam, args.n, args.l)
    cp = char_poly(F)
    out = {
        "n": args.n, "l": args.l, "lambda": list(lam),
        "matrix": F.to_json(),
        "char_poly": cp.to_json(),
        "trace": F.trace().to_json(),
        "det": F.det().to_json(),
        "generic_rank": generic_rank(F),
        "critical_poly": critical_alphas(F).to_json(),
    }
    if args.alpha not in (None, "generic"):
        out["alpha"] = args.alpha
        out["rank_at_alpha"] = rank_at(F, parse_alpha(args.alpha))
    return out


def cmd_transition(args):
    return 0, _transition_payload(args)


def cmd_multiplicity(args):
    lam = parse_partition(args.lam)
    alpha = parse_alpha(args.alpha)
    F = transition_matrix(lam, args.n, args.l)
    mult = generic_rank(F) if alpha is None else rank_at(F, alpha)
    return 0, {"n": args.n, "l": args.l, "lambda": list(lam), "alpha": args.alpha,
               "kostka": F.rows, "mult": mult}


def cmd_kostka(args):
    lam = parse_partition(args.lam)
    mu = [int(x) for x in args.mu.split(",") if x]
    try:
        value = kostka(lam, mu)
    except ValueError as exc:
        raise UsageError(str(exc))
    return 0, {"lambda": list(lam), "mu": mu, "kostka": value}


def cmd_content_poly(args):
    lam = parse_partition(args.lam)
    p = content_poly(lam)
    return 0, {"lambda": list(lam), "content_poly": p.to_json(), "text": str(p)}


def cmd_jacobi_g(args):
    if not 0 <= args.s <= args.l:
        raise UsageError("need 0 <= s <= l")
    p = G(args.s, args.l)
    return 0, {"s": args.s, "l": args.l, "G": p.to_json(), "text": str(p)}


def cmd_heun_check(args):
    potential = "printed" if args.printed else "derived"
    rows = []
    for l in range(1, args.l_max + 1):
        for s in range(l + 1):
            r = heun_residual(l, s, potential=potential)
            rows.append({"l": l, "s": s, "residual": r.to_json(), "zero": r.is_zero()})
    ok = all(r["zero"] for r in rows)
    return (0 if ok else 1), {"potential": potential, "all_zero": ok, "cases": rows}


def cmd_unitarity_check(args):
    rows = []
    for l in range(args.l_max + 1):
        for s in range(l + 1):
            rep = unit_circle_roots(G(s, l), args.tol)
            rows.append({"l": l, "s": s, "max_deviation": rep.max_deviation, "ok": rep.all_on_circle})
    ok = all(r["ok"] for r in rows)
    return (0 if ok else 1), {"tol": args.tol, "all_on_circle": ok, "cases": rows}


def cmd_hahn_check(args):
    rep = hahn_identity_check(args.l)
    return (0 if rep.winner else 1), rep.to_json()


def cmd_gcp(args):
    lam = parse_partition(args.lam)
    p = gcp(args.n, args.l, lam)
    return 0, {"n": args.n, "l": args.l, "lambda": list(lam), "gcp": p.to_json(), "text": str(p)}


def cmd_trace_check(args):
    lams = [parse_partition(args.lam)] if args.lam else list(partitions(args.n * args.l, max_length=args.n))
    reps = [trace_crosscheck(args.n, args.l, lam).to_json() for lam in lams]
    ok = all(r["match"] for r in reps)
    return (0 if ok else 1), reps


def cmd_conjecture_check(args):
    res = conjecture_check(args.n, args.l)
    fmt = lambda d: [{"lambda": list(k), "mult": v} for k, v in sorted(d.items(), reverse=True)]
    return (0 if res.holds else 1), {"n": args.n, "l": args.l, "holds": res.holds,
                                     "permanent": fmt(res.permanent), "sym_sym": fmt(res.sym_sym)}


def cmd_verify(args):
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    kwargs = {}
    if args.n and args.l:
        kwargs = {"n": args.n, "l": args.l}
    checks = run_suite(args.suite, **kwargs)
    ok = all(c.ok for c in checks)
    return (0 if ok else 1), {"suite": args.suite, "passed": ok,
                              "checks": [c.to_json() for c in checks]}


# --- output -------------------------------------------------------------------


def _to_json_obj(payload):
    return payload.to_json() if hasattr(payload, "to_json") else payload


def _csv_rows(payload) -> list[dict]:
    obj = _to_json_obj(payload)
    if isinstance(obj, dict) and "components" in obj:
        rows = []
        for c in obj["components"]:
            rows.append({"n": obj["n"], "l": obj["l"], "alpha": obj["alpha"],
                         "lambda": " ".join(map(str, c["lambda"])), "kostka": c["kostka"],
                         "generic_mult": c["generic_mult"], "mult": c["mult"],
                         "critical_poly": " ".join(c["critical_poly"])})
        return rows
    if isinstance(obj, dict) and "checks" in obj:
        return obj["checks"]
    if isinstance(obj, dict) and "cases" in obj:
        return [{k: (" ".join(v) if isinstance(v, list) else v) for k, v in r.items()} for r in obj["cases"]]
    if isinstance(obj, list):
        return [{k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()} for r in obj]
    return [{k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in obj.items()}]


def _pretty(payload) -> str:
    if hasattr(payload, "components"):
        alpha = "generic" if payload.alpha is None else format_rational(payload.alpha)
        lines = [f"U(gl_{payload.n}) . det^(alpha)(X)^{payload.l} at alpha = {alpha}"]
        for c in payload.components:
            lines.append(f"  {str(c.lam):<14} mult {c.mult} / {c.kostka}   critical: {c.critical_poly}")
        return "\n".join(lines)
    obj = _to_json_obj(payload)
    if isinstance(obj, dict) and "checks" in obj:
        return "\n".join(f"{'PASS' if c['ok'] else 'FAIL'}  {c['name']}  {c['detail']}".rstrip()
                         for c in obj["checks"])
    return json.dumps(obj, indent=2)


def render(payload, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_to_json_obj(payload), indent=2)
    if fmt == "pretty":
        return _pretty(payload)
    rows = _csv_rows(payload)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else [], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alphadet", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
    parser.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *, nl=False, lam=False, alpha=None):
        p = sub.add_parser(name)
        if nl:
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--l", type=int, required=True)
        if lam:
            p.add_argument("--lambda", dest="lam", required=(lam == "required"))
        if alpha is not None:
            p.add_argument("--alpha", default=alpha)
        p.set_defaults(func=func)
        return p

    add("decompose", cmd_decompose, nl=True, alpha="generic")
    p = add("transition", cmd_transition, nl=True, lam="required")
    p.add_argument("--alpha", help="also report the rank at this rational alpha")
    add("multiplicity", cmd_multiplicity, nl=True, lam="required", alpha="generic")
    p = add("kostka", cmd_kostka, lam="required")
    p.add_argument("--mu", required=True)
    add("content-poly", cmd_content_poly, lam="required")
    p = add("jacobi-G", cmd_jacobi_g)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p = add("heun-check", cmd_heun_check)
    p.add_argument("--l-max", type=int, default=6)
    p.add_argument("--printed", action="store_true",
                   help="use the -x potential term instead of the derived -l*x")
    p = add("unitarity-check", cmd_unitarity_check)
    p.add_argument("--l-max", type=int, default=8)
    p.add_argument("--tol", type=float, default=1e-8)
    p = add("hahn-check", cmd_hahn_check)
    p.add_argument("--l", type=int, required=True)
    add("gcp", cmd_gcp, nl=True, lam="required")
    add("trace-check", cmd_trace_check, nl=True, lam="optional")
    add("conjecture-check", cmd_conjecture_check, nl=True)
    p = add("verify", cmd_verify)
    p.add_argument("suite")
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if "alpha" in args and args.alpha is not None:
        try:
            parse_alpha(args.alpha)
        except UsageError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    try:
        code, payload = args.func(args)
    except (UsageError, SizeGuardError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    text = render(payload, args.format)
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
