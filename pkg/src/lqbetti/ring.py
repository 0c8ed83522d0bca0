"""Exact multivariate polynomials over GF(p) or QQ.

Monomials are plain exponent tuples.  A :class:`Polynomial` is an immutable
list of ``(monomial, coefficient)`` pairs kept strictly descending in the
ring's term order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence, Tuple

Monomial = Tuple[int, ...]

DEFAULT_PRIME = 32003
TERM_ORDERS = ("grevlex", "lex")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p) when ``p`` is set, the rationals when ``p`` is None."""

    p: Optional[int] = DEFAULT_PRIME

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"GF({self.p}): {self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime_field"

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    def __call__(self, c):
        """Coerce an integer or Fraction into the field."""
        if self.p is None:
            return Fraction(c)
        if isinstance(c, Fraction):
            return (c.numerator * pow(c.denominator, -1, self.p)) % self.p
        return c % self.p

    def inv(self, c):
        if not c:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(c)
        return pow(c, -1, self.p)

    def symmetric(self, c):
        """Representative used for printing (-p/2 < c <= p/2 over GF(p))."""
        if self.p is None:
            return c
        return c - self.p if c > self.p // 2 else c


def grevlex_key(e: Monomial):
    return (sum(e), tuple(-x for x in reversed(e)))


def lex_key(e: Monomial):
    return e


@dataclass(frozen=True)
class RingSpec:
    """Polynomial ring K[x_1..x_n] together with a term order.

    ``elim_vars = k > 0`` selects the elimination-block order: the first k
    variables compared by grevlex, ties broken by ``term_order`` on the rest.
    """

    var_names: Tuple[str, ...]
    field: FieldSpec = field(default_factory=FieldSpec)
    term_order: str = "grevlex"
    elim_vars: int = 0

    def __post_init__(self):
        object.__setattr__(self, "var_names", tuple(self.var_names))
        if not self.var_names:
            raise ValueError("ring needs at least one variable")
        if len(set(self.var_names)) != len(self.var_names):
            raise ValueError(f"duplicate variable names in {self.var_names}")
        if self.term_order not in TERM_ORDERS:
            raise ValueError(f"unknown term order {self.term_order!r}")
        if not 0 <= self.elim_vars <= len(self.var_names):
            raise ValueError("elimination block larger than the ring")

    @classmethod
    def standard(cls, n: int, **kw) -> "RingSpec":
        if n <= 3:
            names = "xyz"[:n]
        else:
            names = [f"x{k}" for k in range(1, n + 1)]
        return cls(tuple(names), **kw)

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    @cached_property
    def key(self):
        """Sort key realising the term order (bigger key = bigger monomial)."""
        base = grevlex_key if self.term_order == "grevlex" else lex_key
        k = self.elim_vars
        if not k:
            return base
        return lambda e: (grevlex_key(e[:k]), base(e[k:]))

    def one(self) -> Monomial:
        return (0,) * self.num_vars

    def var(self, k: int) -> Monomial:
        return tuple(1 if i == k else 0 for i in range(self.num_vars))

    def with_order(self, term_order: str) -> "RingSpec":
        return RingSpec(self.var_names, self.field, term_order, self.elim_vars)

    def with_field(self, fld: FieldSpec) -> "RingSpec":
        return RingSpec(self.var_names, fld, self.term_order, self.elim_vars)

    def describe(self) -> dict:
        return {
            "vars": list(self.var_names),
            "field": str(self.field),
            "term_order": self.term_order,
        }


# -- monomials ---------------------------------------------------------------

def _check_len(a: Monomial, b: Monomial):
    if len(a) != len(b):
        raise ValueError(f"monomials from different rings: {a} vs {b}")


def mono_degree(a: Monomial) -> int:
    return sum(a)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    _check_len(a, b)
    return tuple(x + y for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_len(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_len(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    """True when b | a."""
    return all(y <= x for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """a / b, or None when b does not divide a."""
    _check_len(a, b)
    q = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in q):
        return None
    return q


def monomials_of_degree(n: int, d: int):
    """All exponent vectors of total degree d in n variables."""
    if d < 0:
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


# -- polynomials -------------------------------------------------------------

class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingSpec, terms: Mapping[Monomial, object] | Iterable = ()):
        if not isinstance(terms, Mapping):
            acc: dict = {}
            for m, c in terms:
                acc[m] = acc.get(m, 0) + c
            terms = acc
        F = ring.field
        n = ring.num_vars
        clean = {}
        for m, c in terms.items():
            if len(m) != n:
                raise ValueError(f"monomial {m} does not live in a {n}-variable ring")
            c = F(c)
            if c:
                clean[tuple(m)] = c
        self.ring = ring
        self.terms: Tuple[Tuple[Monomial, object], ...] = tuple(
            sorted(clean.items(), key=lambda mc: ring.key(mc[0]), reverse=True)
        )

    @classmethod
    def _trusted(cls, ring: RingSpec, d: dict) -> "Polynomial":
        # d already holds normalised nonzero coefficients
        p = object.__new__(cls)
        p.ring = ring
        p.terms = tuple(sorted(d.items(), key=lambda mc: ring.key(mc[0]), reverse=True))
        return p

    @classmethod
    def monomial(cls, ring: RingSpec, m: Monomial, c=1) -> "Polynomial":
        return cls(ring, {tuple(m): c})

    @classmethod
    def variable(cls, ring: RingSpec, k: int) -> "Polynomial":
        return cls(ring, {ring.var(k): 1})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        from .io import format_polynomial

        return f"Polynomial({format_polynomial(self)!r})"

    def _same_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._same_ring(other)
        return Polynomial(self.ring, list(self.terms) + list(other.terms))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self.terms})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._same_ring(other)
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(x + y for x, y in zip(m1, m2))
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(self.ring, acc)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        return Polynomial(self.ring, {m: c * a for m, a in self.terms})

    def mul_monomial(self, u: Monomial, c=1) -> "Polynomial":
        return Polynomial(self.ring, {mono_mul(m, u): c * a for m, a in self.terms})

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m, c = self.terms[0]
        return c, m

    @property
    def lm(self) -> Monomial:
        return self.leading_term()[1]

    @property
    def lc(self):
        return self.leading_term()[0]

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    def degree_info(self) -> Tuple[bool, Optional[int]]:
        degs = {sum(m) for m, _ in self.terms}
        if len(degs) == 1:
            return True, degs.pop()
        # zero polynomial is homogeneous of every degree; report no degree
        return (not degs), None

    def is_homogeneous(self) -> bool:
        return self.degree_info()[0]

    @property
    def degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(m) for m, _ in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def change_ring(self, ring: RingSpec) -> "Polynomial":
        if ring.num_vars != self.ring.num_vars:
            raise ValueError("target ring has a different number of variables")
        if ring.field != self.ring.field:
            if ring.field.p is not None and self.ring.field.p is None:
                return Polynomial(ring, {m: ring.field(c) for m, c in self.terms})
            if ring.field.p is None:
                # lift GF(p) coefficients via the symmetric representative
                F = self.ring.field
                return Polynomial(ring, {m: F.symmetric(c) for m, c in self.terms})
            raise ValueError("cannot map between different prime fields")
        return Polynomial(ring, dict(self.terms))


def degree_info(f: Polynomial):
    return f.degree_info()


def leading_term(f: Polynomial):
    return f.leading_term()


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def max_degree(polys: Sequence[Polynomial]) -> int:
    return max(p.degree for p in polys)
