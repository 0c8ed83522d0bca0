"""Ideal file parsing and text/JSON rendering.

Ideal files look like::

    # comment
    ring x y z : GF(32003) : grevlex
    x*y
    x*y^3*z + y^4*z - y^3*z^2

One generator per line, in the order the checks use.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import List, Optional, Tuple

from .linquot import BettiTable
from .ring import FieldSpec, Polynomial, RingSpec


class IdealSyntaxError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str, line: int, col0: int = 1):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", m.group(1), col0 + start))
        elif m.group(2):
            toks.append(("ident", m.group(2), col0 + start))
        else:
            toks.append(("sym", m.group(3), col0 + start))
        pos = m.end()
    toks.append(("end", "", col0 + len(text.rstrip())))
    return toks


class _PolyParser:
    def __init__(self, ring: RingSpec, text: str, line: int):
        self.ring = ring
        self.line = line
        self.toks = _tokenize(text, line)
        self.i = 0
        self.index = {v: k for k, v in enumerate(ring.var_names)}

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise IdealSyntaxError(msg, self.line, tok[2])

    def expect_int(self) -> int:
        t = self.take()
        if t[0] != "int":
            self.fail(f"expected integer, got {t[1]!r}", t)
        return int(t[1])

    def poly(self) -> Polynomial:
        terms = []
        sign = 1
        if self.peek()[:2] == ("sym", "-"):
            self.take()
            sign = -1
        terms.append(self.term(sign))
        while self.peek()[0] != "end":
            t = self.take()
            if t[:2] == ("sym", "+"):
                terms.append(self.term(1))
            elif t[:2] == ("sym", "-"):
                terms.append(self.term(-1))
            else:
                self.fail(f"unexpected {t[1]!r}", t)
        return Polynomial(self.ring, terms)

    def term(self, sign):
        coef = Fraction(1)
        exps = [0] * self.ring.num_vars
        if self.peek()[0] == "int":
            coef = Fraction(self.expect_int())
            if self.peek()[:2] == ("sym", "/"):
                self.take()
                den = self.expect_int()
                if den == 0:
                    self.fail("zero denominator")
                coef /= den
            t = self.take()
            if t[:2] != ("sym", "*"):
                self.fail("expected '*' after coefficient", t)
        self.factor(exps)
        while self.peek()[:2] == ("sym", "*"):
            self.take()
            self.factor(exps)
        return tuple(exps), self.ring.field(sign * coef)

    def factor(self, exps):
        t = self.take()
        if t[0] != "ident":
            self.fail(f"expected variable, got {t[1]!r}" if t[1] else "expected variable", t)
        if t[1] not in self.index:
            self.fail(f"unknown variable {t[1]!r}", t)
        e = 1
        if self.peek()[:2] == ("sym", "^"):
            self.take()
            e = self.expect_int()
        exps[self.index[t[1]]] += e


def parse_polynomial(ring: RingSpec, text: str, line: int = 1) -> Polynomial:
    return _PolyParser(ring, text, line).poly()


_RING = re.compile(
    r"^\s*ring\s+(?P<vars>[^:]+?)\s*:\s*(?P<field>GF\(\s*\d+\s*\)|QQ)\s*:\s*(?P<order>\w+)\s*$"
)


def parse_field(text: str) -> FieldSpec:
    text = text.replace(" ", "")
    if text == "QQ":
        return FieldSpec.rationals()
    m = re.fullmatch(r"GF\((\d+)\)", text)
    if not m:
        raise ValueError(f"unknown field {text!r}")
    return FieldSpec(int(m.group(1)))


def parse_ring_line(text: str, line: int = 1) -> RingSpec:
    m = _RING.match(text)
    if not m:
        raise IdealSyntaxError("expected 'ring <vars> : <field> : <order>'", line, 1)
    names = m.group("vars").split()
    for k, name in enumerate(names):
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise IdealSyntaxError(f"bad variable name {name!r}", line, text.find(name) + 1)
    order = m.group("order")
    if order not in ("grevlex", "lex"):
        raise IdealSyntaxError(f"unknown term order {order!r}", line, m.start("order") + 1)
    try:
        return RingSpec(tuple(names), parse_field(m.group("field")), order)
    except ValueError as exc:
        raise IdealSyntaxError(str(exc), line, m.start("field") + 1) from None


def parse_ideal_file(text: str, field: Optional[FieldSpec] = None,
                     term_order: Optional[str] = None) -> Tuple[RingSpec, List[Polynomial]]:
    """Parse an ideal file; ``field``/``term_order`` override the ring line."""
    ring = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if ring is None:
            ring = parse_ring_line(body, lineno)
            if field is not None:
                ring = ring.with_field(field)
            if term_order is not None:
                ring = ring.with_order(term_order)
            continue
        f = parse_polynomial(ring, body, lineno)
        col = len(body) - len(body.lstrip()) + 1
        if not f:
            raise IdealSyntaxError("zero generator", lineno, col)
        if not f.is_homogeneous():
            raise IdealSyntaxError("generator is not homogeneous", lineno, col)
        gens.append(f)
    if ring is None:
        raise IdealSyntaxError("missing ring line", 1, 1)
    if not gens:
        raise IdealSyntaxError("no generators", lineno if text else 1, 1)
    return ring, gens


# -- printing ----------------------------------------------------------------

def format_monomial(ring: RingSpec, u) -> str:
    parts = []
    for name, e in zip(ring.var_names, u):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    if not f:
        return "0"
    F = f.ring.field
    out = []
    for k, (m, c) in enumerate(f.terms):
        c = F.symmetric(c)
        neg = c < 0
        c = -c if neg else c
        mono = format_monomial(f.ring, m)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def format_ideal_file(ring: RingSpec, gens: List[Polynomial]) -> str:
    lines = [f"ring {' '.join(ring.var_names)} : {ring.field} : {ring.term_order}"]
    lines += [format_polynomial(g) for g in gens]
    return "\n".join(lines) + "\n"


def format_betti_grid(table: BettiTable, m2_style: bool = False) -> str:
    """Text grid: rows i, columns internal degree j (or M2's j-i rows, i columns)."""
    if not table:
        return "(zero table)\n"
    if m2_style:
        rows = sorted({j - i for i, j in table.entries})
        cols = range(0, max(i for i, _ in table.entries) + 1)
        cell = lambda r, c: table[(c, c + r)]
        head = "i"
    else:
        rows = range(0, max(i for i, _ in table.entries) + 1)
        lo = min(j for _, j in table.entries)
        hi = max(j for _, j in table.entries)
        cols = range(lo, hi + 1)
        cell = lambda r, c: table[(r, c)]
        head = "j"
    cells = [[str(cell(r, c)) if cell(r, c) else "." for c in cols] for r in rows]
    width = max(len(s) for s in [str(c) for c in cols] + [x for row in cells for x in row])
    label = max(len(str(r)) for r in rows) + 1
    lines = [f"{head:>{label}} " + " ".join(f"{c:>{width}}" for c in cols)]
    for r, row in zip(rows, cells):
        lines.append(f"{str(r) + ':':>{label}} " + " ".join(f"{x:>{width}}" for x in row))
    return "\n".join(lines) + "\n"


def parse_betti_grid(text: str, m2_style: bool = False) -> BettiTable:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if lines == ["(zero table)"]:
        return BettiTable()
    cols = [int(c) for c in lines[0].split()[1:]]
    acc = {}
    for ln in lines[1:]:
        label, *cells = ln.split()
        r = int(label.rstrip(":"))
        for c, x in zip(cols, cells):
            if x != ".":
                acc[(c, c + r) if m2_style else (r, c)] = int(x)
    return BettiTable(acc)


def betti_records(table: BettiTable) -> list:
    return [{"i": i, "j": j, "v": v} for (i, j), v in table.items()]


def betti_from_records(records) -> BettiTable:
    return BettiTable({(r["i"], r["j"]): r["v"] for r in records})


def render_json(ring: RingSpec, result: dict, table: Optional[BettiTable]) -> str:
    doc = {
        "ring": ring.describe(),
        "result": result,
        "betti": betti_records(table) if table is not None else [],
    }
    return json.dumps(doc, indent=2, sort_keys=False)


def parse_json_output(text: str):
    doc = json.loads(text)
    return doc, betti_from_records(doc["betti"])
