"""Command-line front end.

Exit status: 0 when everything verifies, 1 when a verification, proof or
cross-check fails, 2 on usage or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arith import HalfInt, render_ratio
from .discover import discover_families
from .family import (
    FamilyReport,
    FamilySpec,
    IdentityInstance,
    ProofResult,
    instantiate,
    parse_family,
    prove_symbolic,
    verify_range,
)
from .poly import poly_eval
from .power_sum import alt_sum_naive, alt_sum_poly, to_u_form
from .search import RhsForm, SearchLimits, SearchReport, brute_force_search, search_structured

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _num(v) -> str:
    if isinstance(v, Fraction):
        return render_ratio(v)
    return str(v)


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi if sep else lo)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected A..B") from None
    if a > b:
        raise UsageError(f"empty range {text!r}")
    return a, b


def dump_record(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"), ensure_ascii=False)


# -- payloads ------------------------------------------------------------------


def instance_payload(inst: IdentityInstance) -> dict:
    return {
        "k": str(inst.k),
        "x": str(inst.x),
        "u": str(inst.family.u(inst.k)),
        "exponents": [str(e) for e in inst.exponents],
        "lhs": _num(inst.lhs),
        "rhs": str(inst.rhs),
        "holds": inst.holds,
    }


def report_payload(rep: FamilyReport) -> dict:
    return {
        "family": rep.family.to_dict(),
        "k_min": str(rep.k_min),
        "k_max": str(rep.k_max),
        "holds": str(rep.holds),
        "fails": str(rep.fails),
        "failures": [instance_payload(i) for i in rep.failures],
    }


def proof_payload(p: ProofResult) -> dict:
    return {
        "family": p.family.to_dict(),
        "proven": p.proven,
        "certificate": [
            {"power": str(c.power), "coefficient": _num(c.coefficient), "beta": str(c.beta)}
            for c in p.certificate
        ],
        "constant": _num(p.constant),
        "failure_reason": p.failure_reason,
    }


def search_payload(rep: SearchReport) -> dict:
    return {
        "method": rep.method,
        "limits": {
            "n_max": str(rep.limits.n_max),
            "u_max": str(rep.limits.u_max),
            "parity": rep.limits.parity,
        },
        "completeness": rep.completeness_claim,
        "solutions": [
            {
                "u": str(s.u),
                "x": str(s.x),
                "exponents": [str(e) for e in s.exponents],
                "verified": s.verified,
            }
            for s in rep.solutions
        ],
    }


# -- text rendering ------------------------------------------------------------


def table_line(inst: IdentityInstance) -> str:
    line = f"k={inst.k}  x={inst.x}  S_{inst.family.d}(x) = {inst.rhs_text()}"
    if not inst.holds:
        line += f"  FAILS: lhs={_num(inst.lhs)} rhs={inst.rhs}"
    return line


def _term_text(b: int, alpha: int, beta: int) -> str:
    if alpha == 0:
        return f"{b}^{beta}"
    head = "k" if alpha == 1 else f"{alpha}k"
    return f"{b}^({head}{beta:+d})" if beta else f"{b}^{head}"


def proof_lines(p: ProofResult) -> list[str]:
    f = p.family
    lines = [f"{f.name or f.to_text()}: {'proven' if p.proven else 'NOT proven'}"]
    for c in sorted(p.certificate, key=lambda c: -c.power):
        lines.append(
            f"  c{c.power}={c.coefficient}={f.b}^{c.beta} -> {_term_text(f.b, c.power, c.beta)}"
        )
    lines.append(f"  constant {p.constant}")
    if not p.proven:
        lines.append(f"  reason: {p.failure_reason}")
    return lines


# -- commands ------------------------------------------------------------------


def cmd_eval(args):
    try:
        x = HalfInt.parse(args.x)
    except ValueError as e:
        raise UsageError(str(e)) from None
    d = args.degree
    naive = alt_sum_naive(x, d)
    via_x = poly_eval(alt_sum_poly(d), x)
    u = x.twice_value + 3
    via_u = to_u_form(d)(u)
    agree = naive == via_x == via_u
    result = {
        "x": str(x),
        "u": str(u),
        "degree": str(d),
        "naive": _num(naive),
        "x_poly": _num(via_x),
        "u_form": _num(via_u),
        "agree": agree,
    }
    text = [f"S_{d}({x}) = {_num(naive)}"]
    if not agree:
        text.append(f"MISMATCH: x-poly {_num(via_x)}, u-form {_num(via_u)}")
    return agree, {"x": str(x), "degree": str(d)}, [result], text


def cmd_verify(args):
    fam = _family(args.family)
    rep = verify_range(fam, args.k_max, workers=args.threads)
    label = fam.name or fam.to_text()
    text = [f"{label}: k={rep.k_min}..{rep.k_max}: {rep.holds} hold, {rep.fails} fail"]
    if rep.first_failure is not None:
        ff = rep.first_failure
        text.append(f"first failure k={ff.k}: lhs {_num(ff.lhs)} vs rhs {ff.rhs}")
    return rep.ok, {"family": fam.to_dict(), "k_max": str(args.k_max)}, [report_payload(rep)], text


def cmd_prove(args):
    fam = _family(args.family)
    p = prove_symbolic(fam)
    return p.proven, {"family": fam.to_dict()}, [proof_payload(p)], proof_lines(p)


def cmd_table(args):
    fam = _family(args.family)
    lo, hi = parse_range(args.k_range)
    try:
        insts = [instantiate(fam, k, allow_below_domain=args.relax_domain) for k in range(lo, hi + 1)]
    except ValueError as e:
        raise UsageError(str(e)) from None
    ok = all(i.holds for i in insts)
    inputs = {"family": fam.to_dict(), "k_range": [str(lo), str(hi)]}
    return ok, inputs, [instance_payload(i) for i in insts], [table_line(i) for i in insts]


def cmd_search(args):
    try:
        rhs = RhsForm.parse(args.rhs)
        limits = SearchLimits(args.n_max, args.u_max, args.parity)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.brute_force:
        rep = brute_force_search(args.degree, args.base, rhs, limits)
    else:
        rep = search_structured(
            args.degree, args.base, rhs, limits, prune=not args.no_prune, workers=args.threads
        )
    ok = all(s.verified for s in rep.solutions)
    inputs = {
        "degree": str(args.degree),
        "base": str(args.base),
        "rhs": str(rhs),
        "n_max": str(args.n_max),
        "u_max": str(args.u_max),
        "parity": args.parity,
        "prune": not args.no_prune,
        "brute_force": args.brute_force,
    }
    text = []
    for s in rep.solutions:
        exps = "  ".join(f"{name}={e}" for name, e in zip("mn", s.exponents))
        text.append(f"u={s.u}  x={s.x}  {exps}")
    text.append(f"{len(rep.solutions)} solution(s); {rep.completeness_claim} [{rep.method}]")
    return ok, inputs, [search_payload(rep)], text


def cmd_discover(args):
    d_range = parse_range(args.degrees)
    b_range = parse_range(args.bases)
    found = discover_families(d_range, b_range, args.allow_const, workers=args.threads)
    ok = all(p.proven for _, p in found)
    inputs = {
        "degrees": [str(v) for v in d_range],
        "bases": [str(v) for v in b_range],
        "allow_const": args.allow_const,
    }
    text = []
    for fam, p in found:
        text.append(fam.to_text())
        text.extend(proof_lines(p)[1:])
    if not found:
        text.append("no families found")
    return ok, inputs, [proof_payload(p) for _, p in found], text


def _family(text: str) -> FamilySpec:
    try:
        return parse_family(text)
    except (ValueError, KeyError) as e:
        raise UsageError(f"bad family {text!r}: {e}") from None


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def global_flags() -> argparse.ArgumentParser:
        # fresh actions per parser: parents share action objects by reference
        flags = argparse.ArgumentParser(add_help=False)
        flags.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                           help="emit one JSON record per line")
        flags.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                           help="suppress normal output")
        flags.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                           help="worker count; output does not depend on it")
        return flags

    parser = argparse.ArgumentParser(prog="altpowers", parents=[global_flags()],
                                     description="Identities x^d - (x+1)^d - (x+2)^d + (x+3)^d = powers of b.")
    parser.set_defaults(json=False, quiet=False, threads=1)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[global_flags()], help="evaluate S_d(x) three ways")
    p.add_argument("--x", required=True, help="integer or n/2")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[global_flags()], help="check a family on k_min..K")
    p.add_argument("--family", required=True, help="built-in name or text spec")
    p.add_argument("--k-max", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("prove", parents=[global_flags()], help="u-form coefficient proof")
    p.add_argument("--family", required=True)
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("table", parents=[global_flags()], help="list instances of a family")
    p.add_argument("--family", required=True)
    p.add_argument("--k-range", required=True, help="A..B")
    p.add_argument("--relax-domain", action="store_true", help="allow k below the family's k_min")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("search", parents=[global_flags()], help="bounded solution search")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--rhs", required=True, help="two-powers | one-power | power-plus-const:C")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--u-max", type=int, required=True)
    p.add_argument("--parity", choices=["odd", "any"], default="odd")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--brute-force", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("discover", parents=[global_flags()], help="derive families over a grid")
    p.add_argument("--degrees", required=True, help="A..B")
    p.add_argument("--bases", required=True, help="A..B")
    p.add_argument("--allow-const", action="store_true")
    p.set_defaults(func=cmd_discover)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.threads < 1:
            raise UsageError("--threads must be >= 1")
        ok, inputs, payloads, text = args.func(args)
    except (UsageError, ValueError) as e:
        print(f"altpowers {args.command}: error: {e}", file=sys.stderr)
        return 2
    if not args.quiet:
        if args.json:
            for payload in payloads:
                record = {
                    "schema_version": SCHEMA_VERSION,
                    "command": args.command,
                    "inputs": inputs,
                    "result": payload,
                }
                print(dump_record(record), file=out)
        else:
            for line in text:
                print(line, file=out)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
