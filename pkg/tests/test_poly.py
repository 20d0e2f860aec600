from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from conftest import CTX, polys, rationals, to_sympy
from postlie.poly import (Context, ContextError, MultiPoly, ParseError, UnboundSymbolError, parse_poly,
                          standard_context)


def P(text, ctx=CTX):
    return parse_poly(text, ctx)


class TestRingLaws:
    @given(polys(), polys())
    def test_addition_commutes(self, p, q):
        assert p + q == q + p

    @given(polys(), polys(), polys())
    def test_multiplication_associates(self, p, q, r):
        assert (p * q) * r == p * (q * r)

    @given(polys(), polys(), polys())
    def test_distributive(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @given(polys())
    def test_additive_inverse(self, p):
        assert (p - p).is_zero()
        assert p + (-p) == CTX.zero()

    @given(polys())
    def test_identities(self, p):
        assert p * CTX.one() == p
        assert p + CTX.zero() == p

    @given(polys(), st.integers(0, 3))
    def test_pow_matches_repeated_product(self, p, k):
        q = CTX.one()
        for _ in range(k):
            q = q * p
        assert p ** k == q


class TestAgainstSympy:
    @given(polys(), polys())
    def test_product(self, p, q):
        assert to_sympy(p * q) == sp.expand(to_sympy(p) * to_sympy(q))

    @given(polys(), st.sampled_from(["a", "b", "c"]))
    def test_derivative(self, p, v):
        assert to_sympy(p.diff(v)) == sp.expand(sp.diff(to_sympy(p), sp.Symbol(v)))


@given(polys(), polys(), st.tuples(rationals, rationals, rationals))
def test_eval_is_a_ring_homomorphism(p, q, pt):
    at = dict(zip(CTX.names, pt))
    assert (p + q).eval(at) == p.eval(at) + q.eval(at)
    assert (p * q).eval(at) == p.eval(at) * q.eval(at)


@given(polys())
def test_parse_format_round_trip(p):
    assert P(p.format()) == p
    assert P(p.format()).format() == p.format()


@given(polys(), polys())
def test_divide_exact_recovers_factor(p, q):
    if q.is_zero():
        return
    assert (p * q).divide_exact(q) == p


def test_grammar_examples():
    assert P("-(a + 1/2*b)") == P("-a - 1/2*b")
    assert P("(a+b)*(a-b)") == P("a^2 - b^2")
    assert P("--a") == P("a")
    assert P("3/6") == MultiPoly.constant(CTX, Fraction(1, 2))
    assert P("2*a*a") == P("2*a^2")


@pytest.mark.parametrize("bad", ["", "a +", "a ** 2", "1/0", "(a", "a)", "q", "a^b", "1/2/3"])
def test_parse_errors(bad):
    with pytest.raises((ParseError, UnboundSymbolError, ZeroDivisionError)):
        P(bad)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        P("a + * b")
    assert info.value.pos == 4


def test_graded_lex_format():
    assert P("a + b^2 + 1 + a*b").format() == "a*b + b^2 + a + 1"


def test_contexts_do_not_mix():
    other = Context(["a", "b"])
    with pytest.raises(ContextError):
        P("a") + P("a", other)
    assert P("a", other).lift(CTX) == P("a")


def test_eval_requires_all_symbols():
    with pytest.raises(UnboundSymbolError):
        P("a*b").eval({"a": 1})
    assert P("a*b").eval({"a": 2, "b": Fraction(1, 3)}) == Fraction(2, 3)


def test_subs_and_coefficients():
    p = P("a^2*b + 3*a*c - c")
    assert p.subs({"a": 2}) == P("4*b + 6*c - c")
    coeffs = p.coefficients_in(["a"])
    assert coeffs[(2,)] == P("b") and coeffs[(1,)] == P("3*c") and coeffs[(0,)] == P("-c")


def test_standard_context_layout():
    ctx = standard_context(2, ("lambda",))
    assert ctx.names == ("x1", "x2", "y1", "y2", "z1", "z2", "lambda")


def test_invalid_symbol_names():
    with pytest.raises(ValueError):
        Context(["1x"])
    with pytest.raises(ValueError):
        Context(["a", "a"])


def test_non_exact_scalars_rejected():
    with pytest.raises(TypeError):
        MultiPoly.constant(CTX, 0.5)
