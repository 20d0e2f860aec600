import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from postlie.catalog import catalog_algebras
from postlie.lie import (JacobiError, LieAlgebra, LieAlgebraError, RequiresInstantiationError, abelian,
                         ad_matrix, bracket, check_jacobi, derivation_basis, derived_series, is_derivation,
                         is_solvable, lower_central_series, nilpotency_class)
from postlie.matrix import PolyMatrix, is_nilpotent
from postlie.poly import standard_context

ALGEBRAS = catalog_algebras()
H3 = ALGEBRAS["h3"]
N4 = ALGEBRAS["n4"]


def test_catalog_size():
    assert len(ALGEBRAS) >= 30


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_every_bundled_algebra_satisfies_jacobi(name):
    assert check_jacobi(ALGEBRAS[name])


@pytest.mark.parametrize("name", sorted(catalog_algebras(printed=True)))
def test_printed_variants(name):
    alg = catalog_algebras(printed=True)[name]
    if name in ("d4", "d4prime_lambda"):
        assert not check_jacobi(alg)
    else:  # a sign convention, not a broken bracket
        assert check_jacobi(alg)


def test_jacobi_violation_raises():
    with pytest.raises(JacobiError):
        LieAlgebra("bad", 3, {(0, 1): [0, 1, 0], (0, 2): [0, 0, 1], (1, 2): [1, 0, 0]})


def test_index_validation():
    with pytest.raises(LieAlgebraError):
        LieAlgebra("bad", 3, {(1, 0): [0, 0, 1]})


def test_bracket_antisymmetric_and_bilinear():
    ctx = H3.ctx
    x, y = H3.generic("x"), H3.generic("y")
    assert bracket(H3, x, y) == tuple(-c for c in bracket(H3, y, x))
    assert bracket(H3, x, y) == (ctx.zero(), ctx.zero(), ctx.parse("x1*y2 - x2*y1"))


class TestSeries:
    @pytest.mark.parametrize("name,cls", [("R3", 1), ("h3", 2), ("h3xR", 2), ("n4", 3)])
    def test_nilpotency_class(self, name, cls):
        assert nilpotency_class(ALGEBRAS[name]) == cls

    @pytest.mark.parametrize("name", ["r3", "r3_1", "r3_-1", "r4", "d4", "h4", "r3prime_0"])
    def test_solvable_not_nilpotent(self, name):
        alg = ALGEBRAS[name]
        assert is_solvable(alg)
        assert nilpotency_class(alg) is None

    def test_series_dimensions(self):
        assert lower_central_series(N4) == [4, 2, 1, 0]
        assert derived_series(N4) == [4, 2, 0]
        assert lower_central_series(ALGEBRAS["r3"]) == [3, 2]

    def test_symbolic_constants_need_instantiation(self):
        alg = ALGEBRAS["r3_lambda"]
        with pytest.raises(RequiresInstantiationError):
            lower_central_series(alg)
        assert lower_central_series(alg.instantiate({"lambda": Fraction(0)})) == [3, 1]


class TestDerivations:
    def test_dimensions(self):
        assert len(derivation_basis(abelian(3))) == 9
        assert len(derivation_basis(H3)) == 6
        # the general derivation of n4 has the seven free entries a..g
        assert len(derivation_basis(N4)) == 7

    @pytest.mark.parametrize("name", ["h3", "h3xR", "n4", "r3", "d4", "h4"])
    def test_basis_elements_are_derivations(self, name):
        alg = ALGEBRAS[name]
        for d in derivation_basis(alg):
            assert is_derivation(alg, d)

    @pytest.mark.parametrize("name", ["h3", "h3xR", "n4", "r4"])
    def test_ad_is_a_derivation(self, name):
        alg = ALGEBRAS[name]
        assert is_derivation(alg, ad_matrix(alg, alg.generic("x")))

    def test_non_derivation(self):
        d = PolyMatrix(H3.ctx, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])
        assert not is_derivation(H3, d)


def _random_combination(basis, rng):
    total = PolyMatrix.zeros(basis[0].ctx, basis[0].rows)
    for b in basis:
        total = total + b.scale(Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
    return total


@pytest.mark.parametrize("name", ["h3", "h3xR", "n4"])
def test_nilpotent_derivation_plus_ad_is_nilpotent(name):
    """100 random strictly lower-triangular derivations D per algebra:
    D + ad_x is nilpotent identically in x."""
    alg = ALGEBRAS[name]
    basis = derivation_basis(alg, strictly_lower=True)
    assert basis
    ad = ad_matrix(alg, alg.generic("x"))
    rng = random.Random(hash(name) & 0xFFFF)
    for _ in range(100):
        d = _random_combination(basis, rng)
        assert is_derivation(alg, d) and is_nilpotent(d)
        assert is_nilpotent(d + ad)


@settings(max_examples=30)
@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_ad_is_a_homomorphism_on_n4(u, v):
    ctx = N4.ctx
    a = tuple(ctx.const(c) for c in u)
    b = tuple(ctx.const(c) for c in v)
    lhs = ad_matrix(N4, bracket(N4, a, b))
    A, B = ad_matrix(N4, a), ad_matrix(N4, b)
    assert lhs == A @ B - B @ A


def test_instantiate_keeps_context():
    alg = ALGEBRAS["r3_lambda"]
    inst = alg.instantiate({"lambda": Fraction(2)})
    assert inst.ctx == alg.ctx and inst.params == ()
    assert inst.structure(0, 2)[2] == alg.ctx.const(2)
    assert alg.ctx == standard_context(3, ("lambda",))
