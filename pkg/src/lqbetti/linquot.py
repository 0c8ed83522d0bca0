"""Linear-quotient certificates and the closed-form Betti numbers they yield.

For a minimal homogeneous system f_1..f_m with linear quotients, let d_p be
deg f_p and n_p the number of linear forms generating <f_1..f_{p-1}> : f_p.
Then beta_{i,i+j} = sum over p with d_p = j of C(n_p, i), reg = max d_p and
projdim = max n_p.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .groebner import (
    LinearSpan,
    colon_principal,
    is_generated_by_linear_forms,
    is_minimal_system,
)
from .monomial import MonomialIdeal, ek_order, is_stable, max_var
from .ring import Polynomial


class BettiTable:
    """Sparse graded Betti numbers keyed by (homological i, internal degree j)."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[Tuple[int, int], int] | Iterable = ()):
        if isinstance(entries, Mapping):
            entries = entries.items()
        acc: Dict[Tuple[int, int], int] = {}
        for (i, j), v in entries:
            if v < 0:
                raise ValueError(f"negative Betti number at {(i, j)}")
            if v:
                acc[(int(i), int(j))] = acc.get((i, j), 0) + int(v)
        self._entries = dict(sorted(acc.items()))

    @property
    def entries(self) -> Dict[Tuple[int, int], int]:
        return dict(self._entries)

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        return self._entries.get(ij, 0)

    def items(self):
        return self._entries.items()

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self):
        return f"BettiTable({self._entries})"

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self._entries.items() if a == i)

    def regularity(self) -> Optional[int]:
        return max((j - i for i, j in self._entries), default=None)

    def projdim(self) -> Optional[int]:
        return max((i for i, _ in self._entries), default=None)

    def diff(self, other: "BettiTable") -> Dict[Tuple[int, int], Tuple[int, int]]:
        keys = set(self._entries) | set(other._entries)
        return {k: (self[k], other[k]) for k in sorted(keys) if self[k] != other[k]}


@dataclass(frozen=True)
class LQCertificate:
    generators: Tuple[Polynomial, ...]
    degrees: Tuple[int, ...]
    colon_ranks: Tuple[int, ...]
    linear_bases: Tuple[LinearSpan, ...]
    minimal: bool

    def __post_init__(self):
        m = len(self.degrees)
        if m == 0:
            raise ValueError("certificate needs at least one generator")
        if not (len(self.colon_ranks) == len(self.linear_bases) == m):
            raise ValueError("certificate fields have inconsistent lengths")
        if self.colon_ranks[0] != 0:
            raise ValueError("n_1 must be 0")
        n = self.generators[0].ring.num_vars if self.generators else None
        if n is not None and any(r > n for r in self.colon_ranks):
            raise ValueError("colon rank exceeds the number of variables")
        # the degree floor only holds for minimal systems
        if self.minimal and any(d < self.degrees[0] for d in self.degrees):
            raise ValueError("minimal certificate violates deg f_1 <= deg f_p")

    @property
    def m(self) -> int:
        return len(self.degrees)

    def steps(self):
        return zip(self.degrees, self.colon_ranks)


class LinearQuotientFailure(ValueError):
    """The ordered system does not have linear quotients (or is not minimal)."""

    def __init__(self, step: Optional[int], reason: str, detail: str = ""):
        self.step = step
        self.reason = reason
        self.detail = detail
        where = f" at step {step}" if step is not None else ""
        super().__init__(f"{reason}{where}{': ' + detail if detail else ''}")


def check_linear_quotients(ordered: Sequence[Polynomial], allow_nonminimal: bool = False) -> LQCertificate:
    if not ordered:
        raise ValueError("empty generator list")
    for k, f in enumerate(ordered, 1):
        if not f:
            raise ValueError(f"generator {k} is zero")
        if not f.is_homogeneous():
            raise ValueError(f"generator {k} is not homogeneous")
    minimal, bad = is_minimal_system(ordered)
    if not minimal and not allow_nonminimal:
        raise LinearQuotientFailure(bad + 1, "minimality", "generator lies in the ideal of the others")
    ranks, spans = [], []
    for p, f in enumerate(ordered):
        G = colon_principal(ordered[:p], f)
        if G.is_unit_ideal():
            raise LinearQuotientFailure(p + 1, "minimality", "generator lies in the ideal of its predecessors")
        ok, r, span = is_generated_by_linear_forms(G)
        if not ok:
            worst = next(g for g in G.elements if g.degree != 1)
            raise LinearQuotientFailure(p + 1, "nonlinear colon", f"colon has a generator of degree {worst.degree}")
        ranks.append(r)
        spans.append(span)
    return LQCertificate(
        generators=tuple(ordered),
        degrees=tuple(f.degree for f in ordered),
        colon_ranks=tuple(ranks),
        linear_bases=tuple(spans),
        minimal=minimal,
    )


def _require_minimal(cert: LQCertificate):
    if not cert.minimal:
        raise ValueError("Betti formulas need a minimal system of generators")


def betti_from_certificate(cert: LQCertificate) -> BettiTable:
    _require_minimal(cert)
    acc: Dict[Tuple[int, int], int] = {}
    for d, r in cert.steps():
        for i in range(r + 1):
            acc[(i, i + d)] = acc.get((i, i + d), 0) + comb(r, i)
    return BettiTable(acc)


def regularity(cert: LQCertificate) -> int:
    _require_minimal(cert)
    return max(cert.degrees)


def projdim(cert: LQCertificate) -> int:
    _require_minimal(cert)
    return max(cert.colon_ranks)


def total_betti(cert: LQCertificate, i: int) -> int:
    _require_minimal(cert)
    return sum(comb(r, i) for r in cert.colon_ranks)


def incremental_betti(prev: BettiTable, d: int, r: int) -> BettiTable:
    """Betti table after adjoining a degree-d generator whose colon has r linear generators."""
    if r < 0 or d < 1:
        raise ValueError("need r >= 0 and d >= 1")
    acc = prev.entries
    for i in range(r + 1):
        acc[(i, i + d)] = acc.get((i, i + d), 0) + comb(r, i)
    return BettiTable(acc)


def ek_betti(J: MonomialIdeal) -> BettiTable:
    """Eliahou-Kervaire numbers: C(m(u)-1, i) at (i, i + deg u) for each generator u."""
    if not is_stable(J):
        raise ValueError("Eliahou-Kervaire formula needs a stable ideal")
    acc: Dict[Tuple[int, int], int] = {}
    for u in ek_order(J):
        d, r = sum(u), max_var(u) - 1
        for i in range(r + 1):
            acc[(i, i + d)] = acc.get((i, i + d), 0) + comb(r, i)
    return BettiTable(acc)
