import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from lqbetti.groebner import (
    GroebnerBasis,
    buchberger,
    colon_principal,
    component_ideal,
    ideal_equal,
    ideal_member,
    is_generated_by_linear_forms,
    is_minimal_system,
    linear_part,
    normal_form,
    times_maximal_ideal,
)
from lqbetti.monomial import colon_mono
from lqbetti.ring import FieldSpec, Polynomial, RingSpec, monomials_of_degree

from corpus import as_polys, four_gen_example, random_monomial_ideals

R2 = RingSpec(("x", "y"))
x, y = (Polynomial.variable(R2, k) for k in range(2))
R3 = RingSpec(("x", "y", "z"))


def els(G):
    return list(G.elements)


def test_normal_form_examples():
    assert not normal_form(x * x * y, buchberger([x * x]))
    assert normal_form(x + y, buchberger([x])) == y
    G = buchberger([x * x - y * y, x * y])
    assert not normal_form((x * x - y * y) * (x + y) + x * y * y, G)


def test_buchberger_examples():
    assert els(buchberger([x, y])) == [x, y]
    assert els(buchberger([x * x - y * y, x * x + y * y])) == [x * x, y * y]
    assert els(buchberger([x * y, y * y])) == [x * y, y * y]
    assert buchberger([Polynomial(R2)], R2).is_zero_ideal()


def test_buchberger_nontrivial_basis():
    # twisted cubic: reduced grevlex basis is the three 2x2 minors
    R = RingSpec(("a", "b", "c", "d"))
    a, b, c, d = (Polynomial.variable(R, k) for k in range(4))
    G = buchberger([a * c - b * b, b * d - c * c, a * d - b * c])
    assert {g.lm for g in G} == {(0, 2, 0, 0), (0, 1, 1, 0), (0, 0, 2, 0)}
    assert len(G) == 3
    for g in [a * c - b * b, b * d - c * c, a * d - b * c]:
        assert ideal_member(g, G)


def test_ideal_member_examples():
    G = buchberger([x * x, y * y])
    assert ideal_member(x * y * y, G)
    assert not ideal_member(x, G)
    assert ideal_member(Polynomial(R2), G)


def test_colon_examples():
    assert els(colon_principal([x * y], y)) == [x]
    assert els(colon_principal([x * x, x * y], x)) == [x, y]
    assert colon_principal([], x * y).is_zero_ideal()
    with pytest.raises(ValueError):
        colon_principal([x], Polynomial(R2))


def _brute_colon_space(f, degree, coeffs=(-1, 0, 1)):
    # <xy> is monomial: q*f lies in it iff every term is divisible by xy
    basis = list(monomials_of_degree(3, degree))
    hits = []
    for cs in itertools.product(coeffs, repeat=len(basis)):
        q = Polynomial(R3, dict(zip(basis, cs)))
        if q and all(m[0] >= 1 and m[1] >= 1 for m, _ in (q * f).terms):
            hits.append(q)
    return hits


def test_colon_step_two_brute_force():
    _, gens = four_gen_example()
    f2 = gens[1]
    # degree 1: exactly the nonzero multiples of x
    lin = _brute_colon_space(f2, 1)
    assert {q.lm for q in lin} == {(1, 0, 0)} and all(len(q) == 1 for q in lin)
    # degree 2: exactly the quadrics divisible by x
    quad = _brute_colon_space(f2, 2)
    assert all(m[0] >= 1 for q in quad for m, _ in q.terms)
    assert len(quad) == 3 ** 3 - 1
    G = colon_principal([gens[0]], f2)
    assert [g.terms for g in G] == [(((1, 0, 0), 1),)]


def test_linear_part_examples():
    assert linear_part(buchberger([x, y * y])).dim == 1
    assert linear_part(buchberger([x * x])).dim == 0
    assert linear_part(buchberger([x, y])).dim == 2


def test_is_generated_by_linear_forms():
    ok, r, span = is_generated_by_linear_forms(buchberger([x]))
    assert (ok, r) == (True, 1)
    ok, r, span = is_generated_by_linear_forms(buchberger([x, y * y]))
    assert (ok, r, list(span.basis)) == (False, 1, [x])
    ok, r, span = is_generated_by_linear_forms(GroebnerBasis(R2, ()))
    assert (ok, r, span.dim) == (True, 0, 0)


def test_is_minimal_system():
    assert is_minimal_system([x * x, x * y * y, y * y]) == (False, 1)
    assert is_minimal_system([x * x, y * y]) == (True, None)
    _, gens = four_gen_example()
    assert is_minimal_system(gens) == (True, None)


def test_component_ideal_examples():
    assert component_ideal([x, y * y], 1) == [x]
    assert component_ideal([x, y * y], 2) == [x * x, x * y, y * y]
    assert component_ideal([x * y], 1) == []


def test_times_maximal_ideal():
    assert times_maximal_ideal([x]) == [x * x, x * y]
    assert times_maximal_ideal([Polynomial(R2)]) == []
    assert times_maximal_ideal([x, y]) == [x * x, x * y, y * y]


def test_ideal_equal_examples():
    assert ideal_equal([x * x, x * y], [x * x, x * y + x * x])
    assert not ideal_equal([x], [x * x])
    f = x * x + (x * y).scale(3)
    assert ideal_equal([f], [f.scale(5)])


def test_rationals_match_prime_field_on_integer_input():
    Q = RingSpec(("x", "y", "z"), FieldSpec.rationals())
    _, gens = four_gen_example()
    q_gens = [g.change_ring(Q) for g in gens]
    for p in range(1, len(gens)):
        a = colon_principal(gens[:p], gens[p])
        b = colon_principal(q_gens[:p], q_gens[p])
        assert [g.change_ring(Q) for g in a] == list(b)


# -- properties --------------------------------------------------------------

small = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)).filter(lambda e: sum(e) == 2),
    st.integers(-3, 3), min_size=1, max_size=3,
).map(lambda d: Polynomial(R3, d)).filter(bool)


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=1, max_size=4), st.randoms(use_true_random=False), st.integers(1, 30000))
def test_canonical_under_permutation_and_scaling(gens, rnd, c):
    G = buchberger(gens)
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert buchberger([g.scale(c) for g in shuffled]).elements == G.elements
    # containment both ways
    assert all(ideal_member(g, G) for g in gens)
    H = buchberger(gens + list(G.elements))
    assert H.elements == G.elements


def test_reduced_basis_invariant():
    _, gens = four_gen_example()
    G = buchberger(gens)
    lms = G.leading_monomials
    assert len(set(lms)) == len(lms)
    for k, g in enumerate(G):
        assert g.lc == 1
        for m, _ in g.terms:
            for l, lm in enumerate(lms):
                if l != k:
                    assert not all(a >= b for a, b in zip(m, lm))


def test_colon_agrees_with_monomial_colon_on_random_ideals():
    count = 0
    rng = random.Random(11)
    for J in random_monomial_ideals(120, seed=5):
        n = J.ring.num_vars
        u = tuple(rng.randint(0, 2) for _ in range(n))
        if not any(u):
            u = (1,) + (0,) * (n - 1)
        G = colon_principal(J.polynomials(), Polynomial.monomial(J.ring, u))
        expected = as_polys(J.ring, colon_mono(list(J.min_gens), u))
        assert buchberger(expected, J.ring).elements == G.elements
        count += 1
    assert count >= 100


def test_colon_times_f_lies_in_ideal():
    _, gens = four_gen_example()
    for p in range(1, len(gens)):
        I = buchberger(gens[:p])
        for h in colon_principal(gens[:p], gens[p]):
            assert ideal_member(h * gens[p], I)


@settings(max_examples=25, deadline=None)
@given(st.lists(small, min_size=1, max_size=3), small)
def test_colon_contains_ideal_and_multiplies_into_it(gens, f):
    I = buchberger(gens)
    C = colon_principal(gens, f)
    assert all(ideal_member(g, C) for g in I)
    assert all(ideal_member(h * f, I) for h in C)
    if ideal_member(f, I):
        assert C.is_unit_ideal()
