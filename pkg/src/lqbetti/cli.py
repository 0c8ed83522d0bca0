"""Command line driver.

Exit codes: 0 success, 1 a checked property is false or two computations
disagree, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from .groebner import colon_principal, component_ideal, ideal_equal
from .io import (
    betti_records,
    format_betti_grid,
    format_monomial,
    format_polynomial,
    parse_field,
    parse_ideal_file,
)
from .linquot import (
    LinearQuotientFailure,
    LQCertificate,
    betti_from_certificate,
    check_linear_quotients,
    ek_betti,
    projdim,
    regularity,
)
from .monomial import (
    MonomialIdeal,
    MonomialLQFailure,
    ek_order,
    is_monomial_system,
    is_stable,
    lq_order_search,
)
from .oracle import betti_table_oracle, herzog_hibi_check, is_componentwise_linear
from .ring import Polynomial


class InputError(Exception):
    """Bad command line input; maps to exit code 2."""


class Output:
    def __init__(self, args, ring):
        self.fmt = args.format
        self.m2 = getattr(args, "m2_style", False)
        self.ring = ring
        self.result: dict = {}
        self.table = None
        self.lines: List[str] = []

    def say(self, line: str = ""):
        self.lines.append(line)

    def grid(self, table):
        self.lines.append(format_betti_grid(table, self.m2).rstrip("\n"))

    def emit(self, stream=None):
        stream = stream or sys.stdout
        if self.fmt == "json":
            doc = {
                "ring": self.ring.describe(),
                "result": self.result,
                "betti": betti_records(self.table) if self.table is not None else [],
            }
            stream.write(json.dumps(doc, indent=2) + "\n")
        else:
            stream.write("\n".join(self.lines) + "\n")


def _load(args, path: Optional[str] = None):
    path = path or args.input
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        field = parse_field(args.field) if args.field else None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return parse_ideal_file(text, field=field, term_order=args.term_order)


def _certify(gens: List[Polynomial], order: str, allow_nonminimal: bool) -> LQCertificate:
    if order == "given":
        return check_linear_quotients(gens, allow_nonminimal=allow_nonminimal)
    if not is_monomial_system(gens):
        raise InputError("--order search needs a monomial ideal")
    J = MonomialIdeal.from_polynomials(gens)
    if len(J) != len(gens) and not allow_nonminimal:
        raise LinearQuotientFailure(None, "minimality", "generators are not a minimal system")
    found = lq_order_search(J)
    if found is None:
        raise LinearQuotientFailure(None, "no linear-quotient order", "search over degree-increasing orders failed")
    return found[1]


def _describe_cert(out: Output, cert: LQCertificate):
    out.result.update({
        "linear_quotients": True,
        "minimal": cert.minimal,
        "order": [format_polynomial(f) for f in cert.generators],
        "degrees": list(cert.degrees),
        "colon_ranks": list(cert.colon_ranks),
        "colon_bases": [[format_polynomial(l) for l in s.basis] for s in cert.linear_bases],
    })
    tag = "minimal system" if cert.minimal else "NOT a minimal system"
    out.say(f"linear quotients: yes ({tag})")
    out.say(f"{'p':>3} {'deg':>4} {'n_p':>4}  colon")
    for p, (f, d, r, s) in enumerate(zip(cert.generators, cert.degrees, cert.colon_ranks, cert.linear_bases), 1):
        colon = ", ".join(format_polynomial(l) for l in s.basis) or "0"
        out.say(f"{p:>3} {d:>4} {r:>4}  <{colon}>   f = {format_polynomial(f)}")


def _fail(out: Output, exc: Exception) -> int:
    out.result.update({"linear_quotients": False, "failure": str(exc)})
    if isinstance(exc, LinearQuotientFailure):
        out.result.update({"step": exc.step, "reason": exc.reason})
    out.say(f"linear quotients: no ({exc})")
    return 1


def cmd_check(args) -> int:
    ring, gens = _load(args)
    out = Output(args, ring)
    out.result["command"] = "check"
    try:
        cert = _certify(gens, args.order, args.allow_nonminimal)
    except (LinearQuotientFailure, MonomialLQFailure) as exc:
        code = _fail(out, exc)
        out.emit()
        return code
    _describe_cert(out, cert)
    if cert.minimal:
        table = betti_from_certificate(cert)
        out.table = table
        out.result.update({"regularity": regularity(cert), "projdim": projdim(cert)})
        out.say(f"reg = {regularity(cert)}, projdim = {projdim(cert)}")
        out.grid(table)
    else:
        out.say("Betti formulas need a minimal system; no table printed")
    out.emit()
    return 0


def cmd_betti(args) -> int:
    ring, gens = _load(args)
    out = Output(args, ring)
    out.result.update({"command": "betti", "method": args.method})
    cert = None
    failure = None
    if args.method in ("formula", "both") or (args.i_max is None and args.j_max is None):
        try:
            cert = _certify(gens, args.order, False)
        except (LinearQuotientFailure, MonomialLQFailure) as exc:
            failure = exc
    if args.method in ("formula", "both") and cert is None:
        code = _fail(out, failure)
        out.emit()
        return code
    formula = betti_from_certificate(cert) if cert is not None else None
    if args.method == "formula":
        out.table = formula
        out.grid(formula)
        out.emit()
        return 0
    if cert is None and args.i_max is None and args.j_max is None:
        print("warning: ideal is not certified; default oracle window "
              "(max degree + n) may miss entries", file=sys.stderr)
    oracle = betti_table_oracle(gens, args.i_max, args.j_max)
    out.table = oracle
    if args.method == "oracle":
        out.grid(oracle)
        out.emit()
        return 0
    agree = formula == oracle
    out.result["agree"] = agree
    out.grid(formula)
    out.say(f"formula == oracle: {'yes' if agree else 'NO'}")
    if not agree:
        out.result["mismatch"] = [
            {"i": i, "j": j, "formula": a, "oracle": b} for (i, j), (a, b) in formula.diff(oracle).items()
        ]
        out.say("oracle table:")
        out.grid(oracle)
    out.emit()
    return 0 if agree else 1


def cmd_ek(args) -> int:
    ring, gens = _load(args)
    if not is_monomial_system(gens):
        raise InputError("ek needs a monomial ideal")
    out = Output(args, ring)
    J = MonomialIdeal.from_polynomials(gens)
    stable = is_stable(J)
    out.result.update({"command": "ek", "stable": stable})
    if not stable:
        out.say("stable: no")
        out.emit()
        return 1
    order = ek_order(J)
    table = ek_betti(J)
    out.table = table
    out.result["order"] = [format_monomial(ring, u) for u in order]
    out.say("stable: yes")
    out.say("Eliahou-Kervaire order: " + ", ".join(format_monomial(ring, u) for u in order))
    out.grid(table)
    out.emit()
    return 0


def cmd_cwl(args) -> int:
    ring, gens = _load(args)
    out = Output(args, ring)
    ok, report = is_componentwise_linear(gens)
    out.result.update({
        "command": "cwl",
        "componentwise_linear": ok,
        "window": [min(report), max(report)] if report else [],
        "components": {str(j): v for j, v in report.items()},
    })
    bad = [j for j, v in report.items() if not v]
    if ok:
        out.say(f"componentwise linear: yes (finite window: degrees {min(report)}..{max(report)} checked)")
    else:
        out.say(f"componentwise linear: no (fails at j = {bad[0]})")
    for j, v in report.items():
        out.say(f"  I_<{j}> has {j}-linear resolution: {'yes' if v else 'no'}")
    out.emit()
    return 0 if ok else 1


def _compare_one(gens, order) -> dict:
    rec: dict = {}
    try:
        cert = _certify(gens, order, False)
    except (LinearQuotientFailure, MonomialLQFailure) as exc:
        return {"ok": False, "failure": str(exc)}
    formula = betti_from_certificate(cert)
    oracle = betti_table_oracle(gens)
    rec["formula_eq_oracle"] = formula == oracle
    if is_monomial_system(gens):
        J = MonomialIdeal.from_polynomials(gens)
        if is_stable(J):
            rec["ek_eq_formula"] = ek_betti(J) == formula
    rec["herzog_hibi"] = herzog_hibi_check(gens)
    gens_in_order = list(cert.generators)
    lemma = True
    for p in range(1, len(gens_in_order)):
        prefix, f = gens_in_order[:p], gens_in_order[p]
        comp = component_ideal(prefix, f.degree)
        lemma &= ideal_equal(colon_principal(prefix, f).elements, colon_principal(comp, f).elements, f.ring)
    rec["colon_lemma"] = lemma
    rec["ok"] = all(v for k, v in rec.items())
    return rec


def cmd_compare(args) -> int:
    if bool(args.input) == bool(args.corpus):
        raise InputError("compare needs exactly one of --input or --corpus")
    paths = [args.input] if args.input else sorted(str(p) for p in Path(args.corpus).glob("*.ideal"))
    if not paths:
        raise InputError(f"no .ideal files in {args.corpus}")
    records = {}
    ring = None
    for path in paths:
        ring, gens = _load(args, path)
        records[path] = _compare_one(gens, args.order)
    ok = all(r["ok"] for r in records.values())
    if args.format == "json":
        doc = {"ring": ring.describe() if args.input else {}, "result": {"command": "compare", "ok": ok, "files": records}, "betti": []}
        print(json.dumps(doc, indent=2))
    else:
        for path, r in records.items():
            detail = ", ".join(f"{k}={v}" for k, v in r.items() if k != "ok")
            print(f"{'OK  ' if r['ok'] else 'FAIL'} {path}: {detail}")
    return 0 if ok else 1


_GLOBAL_DEFAULTS = {"format": "text", "field": None, "term_order": None, "m2_style": False}


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS lets the global flags appear before or after the subcommand
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("text", "json"))
    common.add_argument("--field", help="override the file's field, e.g. GF(101) or QQ")
    common.add_argument("--term-order", choices=("grevlex", "lex"), help="override the file's term order")
    common.add_argument("--m2-style", action="store_true", help="Betti grid with rows j-i and columns i")

    parser = argparse.ArgumentParser(prog="lqbetti", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="certify linear quotients")
    p.add_argument("--input", required=True)
    p.add_argument("--order", choices=("given", "search"), default="given")
    p.add_argument("--allow-nonminimal", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("betti", parents=[common], help="graded Betti numbers")
    p.add_argument("--input", required=True)
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="formula")
    p.add_argument("--order", choices=("given", "search"), default="given")
    p.add_argument("--i-max", type=int)
    p.add_argument("--j-max", type=int)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("ek", parents=[common], help="Eliahou-Kervaire numbers of a stable ideal")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_ek)

    p = sub.add_parser("cwl", parents=[common], help="componentwise linearity via the oracle")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_cwl)

    p = sub.add_parser("compare", parents=[common], help="cross-check formula, oracle, EK and Herzog-Hibi")
    p.add_argument("--input")
    p.add_argument("--corpus", help="directory of .ideal files")
    p.add_argument("--order", choices=("given", "search"), default="given")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    for name, default in _GLOBAL_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        # IdealSyntaxError and bad field/ring values are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
