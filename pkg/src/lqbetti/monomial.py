"""Combinatorial shortcuts for monomial ideals.

Everything here works on exponent tuples only: colons are computed by gcd
arithmetic, and the linear-quotient order search never touches a Groebner
basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, List, Optional, Sequence, Tuple

from .ring import Monomial, Polynomial, RingSpec, mono_divides, mono_gcd


def revlex_degree_key(u: Monomial):
    """Sort key: degree first, then u before v when u >_revlex v."""
    return (sum(u), tuple(reversed(u)))


@dataclass(frozen=True)
class MonomialIdeal:
    ring: RingSpec
    min_gens: Tuple[Monomial, ...]

    @classmethod
    def from_polynomials(cls, gens: Sequence[Polynomial]) -> "MonomialIdeal":
        if not gens:
            raise ValueError("empty generator list")
        for g in gens:
            if not g.is_monomial():
                raise ValueError(f"{g} is not a monomial")
        return minimalize([g.lm for g in gens], gens[0].ring)

    def polynomials(self) -> List[Polynomial]:
        return [Polynomial.monomial(self.ring, u) for u in self.min_gens]

    def __contains__(self, u: Monomial) -> bool:
        return any(mono_divides(g, u) for g in self.min_gens)

    def __len__(self):
        return len(self.min_gens)


def is_monomial_system(gens: Sequence[Polynomial]) -> bool:
    return all(g.is_monomial() for g in gens)


def _antichain(gens: Iterable[Monomial]) -> List[Monomial]:
    uniq = sorted(set(map(tuple, gens)), key=revlex_degree_key)
    out: List[Monomial] = []
    for u in uniq:
        if not any(mono_divides(v, u) for v in out):
            out.append(u)
    return out


def minimalize(gens: Iterable[Monomial], ring: Optional[RingSpec] = None) -> MonomialIdeal:
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    if ring is None:
        ring = RingSpec.standard(len(gens[0]))
    return MonomialIdeal(ring, tuple(_antichain(gens)))


def colon_mono(gens: Sequence[Monomial], u: Monomial) -> List[Monomial]:
    """Minimal generators of <gens> : u (empty list for the zero ideal)."""
    return _antichain(tuple(a - b for a, b in zip(g, mono_gcd(g, u))) for g in gens)


def max_var(u: Monomial) -> int:
    """Largest (1-based) index of a variable dividing u."""
    for k in range(len(u) - 1, -1, -1):
        if u[k]:
            return k + 1
    raise ValueError("m(1) is undefined")


class MonomialLQFailure(ValueError):
    def __init__(self, step: int, witness: Monomial):
        self.step = step
        self.witness = witness
        super().__init__(f"colon at step {step} has non-linear generator {witness}")


def _step_rank(prefix: Sequence[Monomial], u: Monomial):
    """Number of variables generating prefix : u, or the offending generator."""
    colon = colon_mono(prefix, u)
    for g in colon:
        if sum(g) != 1:
            return None, g
    return len(colon), None


def lq_check_mono(ordered: Sequence[Monomial], ring: Optional[RingSpec] = None):
    """Certify that ``ordered`` has linear quotients.

    Returns an :class:`~lqbetti.linquot.LQCertificate`; raises
    :class:`MonomialLQFailure` at the first step whose colon is not
    generated by variables.
    """
    from .groebner import LinearSpan
    from .linquot import LQCertificate

    ordered = [tuple(u) for u in ordered]
    if not ordered:
        raise ValueError("empty generator list")
    if ring is None:
        ring = RingSpec.standard(len(ordered[0]))
    ranks, spans = [], []
    for p, u in enumerate(ordered):
        r, witness = _step_rank(ordered[:p], u)
        if r is None:
            raise MonomialLQFailure(p + 1, witness)
        ranks.append(r)
        colon = colon_mono(ordered[:p], u)
        spans.append(LinearSpan(tuple(Polynomial.monomial(ring, v) for v in colon)))
    minimal = len(_antichain(ordered)) == len(ordered)
    return LQCertificate(
        generators=tuple(Polynomial.monomial(ring, u) for u in ordered),
        degrees=tuple(sum(u) for u in ordered),
        colon_ranks=tuple(ranks),
        linear_bases=tuple(spans),
        minimal=minimal,
    )


def lq_order_search(J: MonomialIdeal, degree_increasing: bool = True):
    """Backtracking search for a linear-quotient order of G(J).

    Returns ``(order, certificate)`` or None.  With ``degree_increasing``
    only degree-nondecreasing orders are explored; ties are tried in input
    index order so the result is deterministic.
    """
    gens = list(J.min_gens)
    m = len(gens)
    chosen: List[int] = []
    used = [False] * m

    def candidates():
        free = [k for k in range(m) if not used[k]]
        if degree_increasing and free:
            low = min(sum(gens[k]) for k in free)
            free = [k for k in free if sum(gens[k]) == low]
        return free

    def extend() -> bool:
        if len(chosen) == m:
            return True
        prefix = [gens[k] for k in chosen]
        for k in candidates():
            r, _ = _step_rank(prefix, gens[k])
            if r is None:
                continue
            used[k] = True
            chosen.append(k)
            if extend():
                return True
            chosen.pop()
            used[k] = False
        return False

    if not extend():
        return None
    order = [gens[k] for k in chosen]
    return order, lq_check_mono(order, J.ring)


def brute_force_orders(J: MonomialIdeal) -> List[List[Monomial]]:
    """Every order of G(J) with linear quotients; tiny inputs only."""
    out = []
    for perm in permutations(J.min_gens):
        try:
            lq_check_mono(perm, J.ring)
        except MonomialLQFailure:
            continue
        out.append(list(perm))
    return out


def is_stable(J: MonomialIdeal) -> bool:
    for u in J.min_gens:
        if not any(u):
            continue
        top = max_var(u) - 1
        for i in range(top):
            v = list(u)
            v[top] -= 1
            v[i] += 1
            if tuple(v) not in J:
                return False
    return True


def ek_order(J: MonomialIdeal) -> List[Monomial]:
    return sorted(J.min_gens, key=revlex_degree_key)


def stable_closure(gens: Iterable[Monomial], ring: Optional[RingSpec] = None) -> MonomialIdeal:
    """Smallest stable ideal containing the given monomials."""
    todo = list(map(tuple, gens))
    seen = set(todo)
    while todo:
        u = todo.pop()
        if not any(u):
            continue
        top = max_var(u) - 1
        for i in range(top):
            v = list(u)
            v[top] -= 1
            v[i] += 1
            v = tuple(v)
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return minimalize(seen, ring)
