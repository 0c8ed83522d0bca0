"""Buchberger's algorithm and the ideal operations built on it.

Reduced Groebner bases are the canonical representation of ideals here:
colon ideals, membership, graded components and ideal equality all go
through :func:`buchberger`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .ring import (
    Monomial,
    Polynomial,
    RingSpec,
    mono_divides,
    monomials_of_degree,
)


# -- dict-level kernels ------------------------------------------------------
# Internal polynomials are {monomial: coefficient} dicts; basis entries are
# (leading monomial, monic dict) pairs.

def _sub_multiple(p: dict, g: dict, shift: Monomial, c, P):
    """p -= c * x^shift * g, in place."""
    for gm, gc in g.items():
        m = tuple(a + b for a, b in zip(gm, shift))
        v = p.get(m, 0) - c * gc
        if P is not None:
            v %= P
        if v:
            p[m] = v
        else:
            p.pop(m, None)


def _lead(p: dict, key) -> Monomial:
    return max(p, key=key)


def _make_monic(p: dict, lm: Monomial, F) -> dict:
    inv = F.inv(p[lm])
    P = F.p
    if P is None:
        return {m: c * inv for m, c in p.items()}
    return {m: (c * inv) % P for m, c in p.items()}


def _reduce(p: dict, basis: Sequence[Tuple[Monomial, dict]], ring: RingSpec) -> dict:
    """Full normal form of p modulo basis (basis elements monic)."""
    key = ring.key
    P = ring.field.p
    p = dict(p)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, g in basis:
            if mono_divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                _sub_multiple(p, g, shift, c, P)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _spoly(f: Tuple[Monomial, dict], g: Tuple[Monomial, dict], P) -> dict:
    (lf, df), (lg, dg) = f, g
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    out = {}
    for m, c in df.items():
        out[tuple(a + b for a, b in zip(m, sf))] = c
    _sub_multiple(out, dg, sg, 1, P)
    return out


def _buchberger(polys: Sequence[dict], ring: RingSpec) -> List[Tuple[Monomial, dict]]:
    key = ring.key
    F = ring.field
    P = F.p
    G: List[Optional[Tuple[Monomial, dict]]] = []
    pairs: list = []

    def add(h: dict):
        lm = _lead(h, key)
        h = _make_monic(h, lm, F)
        new = len(G)
        for i, e in enumerate(G):
            if e is None:
                continue
            lcm = tuple(max(a, b) for a, b in zip(e[0], lm))
            heapq.heappush(pairs, (sum(lcm), i, new))
        G.append((lm, h))

    for p in polys:
        h = _reduce(p, [g for g in G if g is not None], ring)
        if h:
            add(h)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        gi, gj = G[i], G[j]
        li, lj = gi[0], gj[0]
        # coprime leading monomials: S-polynomial reduces to zero
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # chain criterion: some g_k with lm | lcm whose pairs with i and j are done
        lcm = tuple(max(a, b) for a, b in zip(li, lj))
        if _chain_skip(G, i, j, lcm, pairs):
            continue
        h = _reduce(_spoly(gi, gj, P), [g for g in G if g is not None], ring)
        if h:
            add(h)

    return _interreduce([g for g in G if g is not None], ring)


def _chain_skip(G, i, j, lcm, pairs) -> bool:
    pending = None
    for k, e in enumerate(G):
        if k in (i, j) or e is None or not mono_divides(e[0], lcm):
            continue
        if pending is None:
            pending = {(a, b) for _, a, b in pairs}
        ik = (min(i, k), max(i, k))
        jk = (min(j, k), max(j, k))
        if ik not in pending and jk not in pending:
            return True
    return False


def _interreduce(G: List[Tuple[Monomial, dict]], ring: RingSpec) -> List[Tuple[Monomial, dict]]:
    key = ring.key
    lms = [lm for lm, _ in G]
    keep = []
    for idx, (lm, g) in enumerate(G):
        dominated = any(
            k != idx and mono_divides(other, lm) and (other != lm or k < idx)
            for k, other in enumerate(lms)
        )
        if not dominated:
            keep.append((lm, g))
    out = []
    for idx, (lm, g) in enumerate(keep):
        others = [e for k, e in enumerate(keep) if k != idx]
        tail = {m: c for m, c in g.items() if m != lm}
        tail = _reduce(tail, others, ring)
        tail[lm] = g[lm]
        out.append((lm, tail))
    out.sort(key=lambda e: key(e[0]), reverse=True)
    return out


def _row_reduce(vectors: Sequence[dict], ring: RingSpec) -> List[Tuple[Monomial, dict]]:
    """Reduced row echelon form of polynomials viewed as coefficient vectors."""
    key = ring.key
    F = ring.field
    P = F.p
    zero = ring.one()
    pivots: dict = {}
    for v in vectors:
        v = dict(v)
        while v:
            m = max(v, key=key)
            if m in pivots:
                _sub_multiple(v, pivots[m], zero, v[m], P)
            else:
                pivots[m] = _make_monic(v, m, F)
                break
    # back substitution
    order = sorted(pivots, key=key)
    for idx, m in enumerate(order):
        row = pivots[m]
        for lower in order[:idx]:
            c = row.get(lower)
            if c:
                _sub_multiple(row, pivots[lower], zero, c, P)
    return sorted(pivots.items(), key=lambda e: key(e[0]), reverse=True)


# -- public types ------------------------------------------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingSpec
    elements: Tuple[Polynomial, ...]
    reduced: bool = True

    @classmethod
    def _from_pairs(cls, ring, pairs) -> "GroebnerBasis":
        return cls(ring, tuple(Polynomial._trusted(ring, d) for _, d in pairs))

    def _pairs(self):
        return [(g.lm, g.as_dict()) for g in self.elements]

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [g.lm for g in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def is_zero_ideal(self) -> bool:
        return not self.elements

    def is_unit_ideal(self) -> bool:
        return any(sum(g.lm) == 0 for g in self.elements)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_member(f, self)


@dataclass(frozen=True)
class LinearSpan:
    """Row-reduced linear forms; doubles as a reduced Groebner basis."""

    basis: Tuple[Polynomial, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def leading_variables(self) -> List[int]:
        return [g.lm.index(1) for g in self.basis]


def _ring_of(gens: Sequence[Polynomial], ring: Optional[RingSpec]) -> RingSpec:
    if ring is not None:
        return ring
    if not gens:
        raise ValueError("cannot infer the ring of an empty generator list")
    r = gens[0].ring
    for g in gens:
        if g.ring != r:
            raise ValueError("generators live in different rings")
    return r


def buchberger(gens: Sequence[Polynomial], ring: Optional[RingSpec] = None) -> GroebnerBasis:
    """Reduced Groebner basis of <gens>.  Zero generators are dropped."""
    ring = _ring_of(gens, ring)
    for g in gens:
        if g.ring != ring:
            raise ValueError("generator from a different ring")
    dicts = [g.as_dict() for g in gens if g]
    return GroebnerBasis._from_pairs(ring, _buchberger(dicts, ring))


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    if f.ring != G.ring:
        raise ValueError("polynomial and basis from different rings")
    return Polynomial._trusted(G.ring, _reduce(f.as_dict(), G._pairs(), G.ring))


def ideal_member(f: Polynomial, G: GroebnerBasis) -> bool:
    return not normal_form(f, G)


def _exact_divide(h: dict, f: Polynomial) -> dict:
    ring = f.ring
    key = ring.key
    F = ring.field
    P = F.p
    lc, lm = f.leading_term()
    inv = F.inv(lc)
    fd = f.as_dict()
    h = dict(h)
    q = {}
    while h:
        m = max(h, key=key)
        shift = tuple(a - b for a, b in zip(m, lm))
        if any(s < 0 for s in shift):
            raise ArithmeticError("inexact division in colon computation")
        c = h[m] * inv
        if P is not None:
            c %= P
        q[shift] = c
        _sub_multiple(h, fd, shift, c, P)
    return q


def colon_principal(gens: Sequence[Polynomial], f: Polynomial) -> GroebnerBasis:
    """Reduced Groebner basis of <gens> : f, by elimination of an auxiliary t."""
    if not f:
        raise ValueError("colon by the zero polynomial")
    ring = f.ring
    gens = [g for g in gens if g]
    for g in gens:
        if g.ring != ring:
            raise ValueError("generator from a different ring")
    ext = RingSpec(("_t",) + ring.var_names, ring.field, ring.term_order, elim_vars=1)
    inputs = [{(1,) + m: c for m, c in g.terms} for g in gens]
    one_minus_t = {}
    for m, c in f.terms:
        one_minus_t[(0,) + m] = c
        one_minus_t[(1,) + m] = -c if ring.field.p is None else (-c) % ring.field.p
    inputs.append(one_minus_t)
    quotients = []
    for lm, d in _buchberger(inputs, ext):
        if lm[0]:
            # elimination order: once t divides the lm, it occurs in the element
            continue
        h = {m[1:]: c for m, c in d.items()}
        quotients.append(_exact_divide(h, f))
    return GroebnerBasis._from_pairs(ring, _buchberger(quotients, ring))


def linear_part(G: GroebnerBasis) -> LinearSpan:
    lin = [g for g in G.elements if g.degree_info() == (True, 1)]
    if not lin:
        return LinearSpan()
    rows = _row_reduce([g.as_dict() for g in lin], G.ring)
    return LinearSpan(tuple(Polynomial._trusted(G.ring, d) for _, d in rows))


def is_generated_by_linear_forms(G: GroebnerBasis) -> Tuple[bool, int, LinearSpan]:
    span = linear_part(G)
    L = GroebnerBasis(G.ring, span.basis)
    ok = all(ideal_member(g, L) for g in G.elements)
    return ok, span.dim, span


def is_minimal_system(gens: Sequence[Polynomial]) -> Tuple[bool, Optional[int]]:
    """(True, None) when no generator lies in the ideal of the others."""
    ring = _ring_of(gens, None)
    for p, f in enumerate(gens):
        others = [g for k, g in enumerate(gens) if k != p]
        if not f or (others and ideal_member(f, buchberger(others, ring))):
            return False, p
    return True, None


def graded_piece(G: GroebnerBasis, j: int) -> List[Polynomial]:
    """Echelon basis of the degree-j part of the ideal of G (homogeneous G)."""
    ring = G.ring
    span = []
    for g in G.elements:
        ok, d = g.degree_info()
        if not ok:
            raise ValueError("graded pieces need a homogeneous basis")
        if d > j:
            continue
        gd = g.as_dict()
        for u in monomials_of_degree(ring.num_vars, j - d):
            span.append({tuple(a + b for a, b in zip(m, u)): c for m, c in gd.items()})
    return [Polynomial._trusted(ring, d) for _, d in _row_reduce(span, ring)]


def component_ideal(gens: Sequence[Polynomial], j: int, ring: Optional[RingSpec] = None) -> List[Polynomial]:
    """Generators of I_<j>: a vector-space basis of the degree-j piece of I."""
    if j < 0:
        raise ValueError("negative degree")
    gens = [g for g in gens if g]
    if not gens:
        return []
    return graded_piece(buchberger(gens, ring), j)


def times_maximal_ideal(gens: Sequence[Polynomial], ring: Optional[RingSpec] = None) -> List[Polynomial]:
    """Generators x_k * g of m * <gens>, row-reduced within each degree."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = _ring_of(gens, ring)
    by_degree: dict = {}
    for g in gens:
        for k in range(ring.num_vars):
            h = g.mul_monomial(ring.var(k))
            by_degree.setdefault(h.degree, []).append(h.as_dict())
    out = []
    for d in sorted(by_degree):
        out.extend(Polynomial._trusted(ring, v) for _, v in _row_reduce(by_degree[d], ring))
    return out


def ideal_equal(a: Sequence[Polynomial], b: Sequence[Polynomial], ring: Optional[RingSpec] = None) -> bool:
    if ring is None:
        ring = _ring_of(list(a) + list(b), None)
    return buchberger(a, ring).elements == buchberger(b, ring).elements
