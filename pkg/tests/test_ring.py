from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lqbetti.ring import (
    FieldSpec,
    Polynomial,
    RingSpec,
    mono_div,
    mono_gcd,
    mono_lcm,
    mono_mul,
    poly_add,
    poly_mul,
)

R = RingSpec(("x", "y", "z"))
x, y, z = (Polynomial.variable(R, k) for k in range(3))


def test_mono_gcd():
    assert mono_gcd((2, 1, 0), (1, 3, 0)) == (1, 1, 0)
    assert mono_gcd((2, 0, 0), (0, 2, 0)) == (0, 0, 0)
    assert mono_gcd((1, 4, 2), (1, 4, 2)) == (1, 4, 2)
    with pytest.raises(ValueError):
        mono_gcd((1, 0), (1, 0, 0))


def test_mono_div():
    assert mono_div((2, 1, 0), (1, 0, 0)) == (1, 1, 0)
    assert mono_div((2, 1, 0), (0, 2, 0)) is None
    assert mono_div((3, 1, 2), (0, 0, 0)) == (3, 1, 2)


def test_add_mul_examples():
    assert poly_add(x + y, x - y) == x.scale(2)
    assert poly_mul(x + y, x - y) == x * x - y * y
    zero = Polynomial(R)
    assert (x * y + z) + zero == x * y + z
    assert not zero


def test_leading_term():
    assert (x * x + x * y * y).leading_term() == (1, (1, 2, 0))
    L = RingSpec(("x", "y"), term_order="lex")
    xl, yl = Polynomial.variable(L, 0), Polynomial.variable(L, 1)
    assert (xl * yl * yl + yl * yl * yl * yl).leading_term()[1] == (1, 2)
    assert Polynomial.monomial(R, (0, 2, 1), 7).leading_term() == (7, (0, 2, 1))
    with pytest.raises(ValueError):
        Polynomial(R).leading_term()


def test_grevlex_tie_break():
    # equal degree: the monomial with smaller last exponent wins
    assert Polynomial(R, {(0, 2, 0): 1, (1, 0, 1): 1}).lm == (0, 2, 0)
    assert Polynomial(R, {(2, 0, 0): 1, (1, 1, 0): 1}).lm == (2, 0, 0)


def test_degree_info():
    assert (x * x * z * z * z).degree_info() == (True, 5)
    assert (x * x * x + x * x * y - x * x * z).degree_info() == (True, 3)
    assert (x + y * y).degree_info() == (False, None)


def test_field_validation():
    with pytest.raises(ValueError):
        FieldSpec(32004)
    assert FieldSpec().p == 32003
    assert str(FieldSpec.rationals()) == "QQ"
    assert FieldSpec(7)(Fraction(1, 2)) == 4


def test_ring_validation():
    with pytest.raises(ValueError):
        RingSpec(("x", "x"))
    with pytest.raises(ValueError):
        RingSpec(("x",), term_order="deglex")


def test_elimination_order_puts_block_first():
    E = RingSpec(("t", "x", "y"), elim_vars=1)
    f = Polynomial(E, {(1, 0, 0): 1, (0, 3, 0): 1})
    assert f.lm == (1, 0, 0)


def test_mismatched_rings():
    S = RingSpec(("a", "b", "c"))
    with pytest.raises(ValueError):
        x + Polynomial.variable(S, 0)


# -- properties --------------------------------------------------------------

SMALL = RingSpec(("x", "y", "z"), FieldSpec(101))
monos = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(monos, st.integers(-50, 50), max_size=5).map(lambda d: Polynomial(SMALL, d))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f
    assert f * g == g * f


@given(monos, monos)
def test_gcd_lcm_reconstruct_product(a, b):
    g = mono_gcd(a, b)
    assert mono_mul(mono_mul(g, mono_div(a, g)), mono_div(b, g)) == mono_lcm(a, b)
    assert mono_mul(mono_lcm(a, b), g) == mono_mul(a, b)


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_leading_term_multiplicative(f, g):
    if not f or not g:
        return
    (cf, mf), (cg, mg) = f.leading_term(), g.leading_term()
    assert (f * g).leading_term() == ((cf * cg) % 101, mono_mul(mf, mg))
