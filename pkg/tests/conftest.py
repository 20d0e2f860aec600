from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from postlie.matrix import PolyMatrix
from postlie.poly import Context, MultiPoly

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

CTX = Context(["a", "b", "c"])

small = st.integers(-6, 6)
rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


@st.composite
def polys(draw, ctx=CTX, max_terms=4, max_exp=3):
    n = len(ctx)
    terms = draw(st.dictionaries(st.tuples(*[st.integers(0, max_exp)] * n), rationals, max_size=max_terms))
    return MultiPoly(ctx, terms)


@st.composite
def qmatrices(draw, n=4, lo=-3, hi=3):
    return [[Fraction(draw(st.integers(lo, hi))) for _ in range(n)] for _ in range(n)]


def to_sympy(p: MultiPoly, symbols=None):
    symbols = symbols or {n: sp.Symbol(n) for n in p.ctx.names}
    expr = sp.Integer(0)
    for e, c in p.items():
        term = sp.Rational(c.numerator, c.denominator)
        for name, k in zip(p.ctx.names, e):
            term *= symbols[name] ** k
        expr += term
    return sp.expand(expr)


def matrix_to_sympy(m: PolyMatrix):
    syms = {n: sp.Symbol(n) for n in m.ctx.names}
    return sp.Matrix([[to_sympy(v, syms) for v in row] for row in m.tolist()])


@pytest.fixture(scope="session")
def catalog_rows():
    from postlie.catalog import load_catalog
    return load_catalog()


@pytest.fixture(scope="session")
def catalog_reports(catalog_rows):
    from postlie.catalog import verify_row
    return {r.id: verify_row(r) for r in catalog_rows}
