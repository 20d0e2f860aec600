import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import matrix_to_sympy, qmatrices, to_sympy
from postlie import qlinalg
from postlie.matrix import (DimensionError, ElementType, PolyMatrix, UnsupportedInputError, char_poly,
                            determinant, element_type, is_nilpotent, is_semisimple, jordan_chevalley,
                            minimal_polynomial, nilpotency_index)
from postlie.poly import Context, standard_context

CTX3 = standard_context(3)


def M(rows, ctx=CTX3):
    return PolyMatrix(ctx, rows)


@st.composite
def symbolic_matrices(draw, n=3):
    ctx = CTX3
    atoms = st.sampled_from(["0", "0", "1", "-1", "1/2", "x1", "x2", "-x3", "y1", "2*y2", "x1*y1", "x2 + y3"])
    return M([[draw(atoms) for _ in range(n)] for _ in range(n)], ctx)


class TestDeterminant:
    @settings(max_examples=40)
    @given(symbolic_matrices(3))
    def test_matches_sympy_3x3(self, m):
        assert to_sympy(determinant(m)) == sp.expand(matrix_to_sympy(m).det())

    @settings(max_examples=15)
    @given(symbolic_matrices(4))
    def test_matches_sympy_4x4(self, m):
        assert to_sympy(determinant(m)) == sp.expand(matrix_to_sympy(m).det(method="berkowitz"))

    def test_bareiss_path_on_6x6(self):
        rng = random.Random(3)
        ctx = Context(["a"])
        rows = [[rng.choice(["0", "1", "-2", "a", "a+1", "3*a"]) for _ in range(6)] for _ in range(6)]
        m = PolyMatrix(ctx, rows)
        expected = sp.Matrix([[sp.sympify(c) for c in r] for r in rows]).det(method="berkowitz")
        assert to_sympy(determinant(m)) == sp.expand(expected)

    def test_inverse(self):
        t = M([["0", "1", "0"], ["0", "0", "1"], ["1", "0", "x1"]])
        assert t @ t.inverse() == PolyMatrix.identity(CTX3, 3)
        with pytest.raises(ZeroDivisionError):
            M([["x1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]).inverse()


class TestCharPoly:
    @settings(max_examples=30)
    @given(symbolic_matrices(3))
    def test_matches_sympy(self, m):
        lam = sp.Symbol("lam")
        cp = char_poly(m)
        ours = sum(to_sympy(c) * lam**k for k, c in enumerate(cp.coefficients))
        assert sp.expand(ours - matrix_to_sympy(m).charpoly(lam).as_expr()) == 0

    @settings(max_examples=30)
    @given(symbolic_matrices(3))
    def test_cayley_hamilton(self, m):
        assert char_poly(m).evaluate_at(m).is_zero()

    @settings(max_examples=30)
    @given(symbolic_matrices(3))
    def test_nilpotency_agrees_with_charpoly(self, m):
        assert is_nilpotent(m) == char_poly(m).is_pure_power()

    def test_format_uses_lambda(self):
        m = M([["0", "-x3", "0"], ["x3", "0", "0"], ["1/2*x2", "-1/2*x1", "0"]])
        assert char_poly(m).format() == "lambda^3 + lambda*x3^2"


class TestNilpotency:
    def test_index(self):
        assert nilpotency_index(M([[0, 1, 0], [0, 0, 1], [0, 0, 0]])) == 3
        assert nilpotency_index(M([[0, 0, 0], [0, 0, 0], [0, 0, 0]])) == 1
        assert nilpotency_index(M([[0, "x1", 0], [0, 0, 0], [0, 0, 0]])) == 2
        assert nilpotency_index(M([[0, 1, 0], [1, 0, 0], [0, 0, 0]])) is None

    def test_polynomial_identity_semantics(self):
        # nilpotent at x1 = 0 only, hence not nilpotent as an identity
        assert not is_nilpotent(M([["x1", 0, 0], [0, 0, 0], [0, 0, 0]]))

    def test_shape_errors(self):
        with pytest.raises(DimensionError):
            PolyMatrix(CTX3, [[1, 2], [3]])
        with pytest.raises(DimensionError):
            char_poly(PolyMatrix(CTX3, [[1, 2, 3], [4, 5, 6]]))


def _known_jc(rng):
    """Random P (J_s + J_n) P^-1 with both parts known."""
    while True:
        P = sp.Matrix(4, 4, lambda i, j: rng.randint(-2, 2))
        if P.det() != 0:
            break
    a, b = rng.randint(-3, 3), rng.randint(-3, 3)
    S0 = sp.diag(a, a, b, b)
    N0 = sp.zeros(4)
    if rng.random() < 0.7:
        N0[0, 1] = 1
    if rng.random() < 0.5:
        N0[2, 3] = 1
    Pi = P.inv()
    return P * (S0 + N0) * Pi, P * S0 * Pi, P * N0 * Pi


def _to_poly(m):
    ctx = Context(["u"])
    return PolyMatrix(ctx, [[Fraction(int(sp.numer(v)), int(sp.denom(v))) for v in m.row(i)] for i in range(m.rows)])


class TestJordanChevalley:
    def test_against_constructed_decompositions(self):
        rng = random.Random(11)
        for _ in range(25):
            A, S, N = _known_jc(rng)
            jp = jordan_chevalley(_to_poly(A))
            assert jp.semisimple == _to_poly(S)
            assert jp.nilpotent == _to_poly(N)

    @settings(max_examples=100)
    @given(qmatrices(4))
    def test_invariants_on_random_4x4(self, rows):
        m = PolyMatrix(Context(["u"]), rows)
        jp = jordan_chevalley(m)
        S, N = jp.semisimple, jp.nilpotent
        assert S + N == m
        assert S @ N == N @ S
        assert is_nilpotent(N)
        assert qlinalg.is_squarefree(minimal_polynomial(S.to_rational()))

    def test_element_types(self):
        ctx = Context(["u"])
        assert element_type(PolyMatrix(ctx, [[0, 1], [0, 0]])) is ElementType.NILPOTENT
        assert element_type(PolyMatrix(ctx, [[0, -1], [1, 0]])) is ElementType.SEMISIMPLE
        assert element_type(PolyMatrix(ctx, [[1, 1], [0, 1]])) is ElementType.MIXED
        assert is_semisimple(PolyMatrix(ctx, [[0, -1], [1, 0]]))
        assert not is_semisimple(PolyMatrix(ctx, [[1, 1], [0, 1]]))

    def test_symbolic_input_rejected(self):
        with pytest.raises(UnsupportedInputError):
            jordan_chevalley(M([["x1", 0, 0], [0, 0, 0], [0, 0, 0]]))


def test_minimal_polynomial_examples():
    assert minimal_polynomial(qlinalg.qmat([[2, 0], [0, 2]])) == [Fraction(-2), Fraction(1)]
    assert minimal_polynomial(qlinalg.qmat([[2, 1], [0, 2]])) == [Fraction(4), Fraction(-4), Fraction(1)]
