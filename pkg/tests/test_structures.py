from fractions import Fraction

import pytest
import sympy as sp

from helpers import CTX3, EUCLID_L, EUCLID_R, H3, euclid_embedding, mat
from postlie.affine import AffElement, Embedding, check_morphism
from postlie.catalog import catalog_algebras, get_row, load_catalog, row_params
from postlie.lie import abelian, ad_matrix, nilpotency_class
from postlie.matrix import PolyMatrix, is_nilpotent
from postlie.structures import (ALL, PlasStructure, PreconditionError, StructureError, bracket_from_product,
                                complete_2step, completeness_report, induce_plas, left_complete, left_mult,
                                psi, psi_is_morphism, psi_push, right_complete, right_mult,
                                right_nilpotency_probe, shift_nilpotency_locus, shifted_right, verify_ls,
                                verify_plas)

ALG = catalog_algebras()
ROWS = load_catalog()


@pytest.fixture(scope="module")
def euclid():
    return induce_plas(euclid_embedding())


class TestEuclidExample:
    def test_left_and_right(self, euclid):
        y = tuple(CTX3.symbol(f"y{i}") for i in (1, 2, 3))
        x = tuple(CTX3.symbol(f"x{i}") for i in (1, 2, 3))
        assert left_mult(euclid, x) == mat(CTX3, EUCLID_L)
        assert right_mult(euclid, y) == mat(CTX3, EUCLID_R)
        assert ad_matrix(H3, y) == mat(CTX3, "0 0 0; 0 0 0; -y2 y1 0")

    def test_axioms(self, euclid):
        assert verify_plas(euclid).ok

    def test_neither_side_nilpotent(self, euclid):
        assert not left_complete(euclid)
        assert not right_complete(euclid)

    def test_complete(self, euclid):
        assert shifted_right(euclid) == mat(CTX3, "0 0 -y2; 0 0 y1; 0 0 0")
        assert complete_2step(euclid)
        rep = completeness_report(euclid)
        assert rep.shifted_nilpotent and rep.unit_shift_complete and rep.caveat is None

    def test_shift_locus_against_sympy(self, euclid):
        c, y1, y2, y3, lam = sp.symbols("c y1 y2 y3 lam")
        R = sp.Matrix([[0, 0, -y2], [0, 0, y1], [-y2 / 2, y1 / 2, 0]])
        ad = sp.Matrix([[0, 0, 0], [0, 0, 0], [-y2, y1, 0]])
        cp = sp.Poly((R - c * ad).charpoly(lam).as_expr() - lam ** 3, lam, y1, y2, y3)
        sols = sp.solve(list(cp.coeffs()), [c], dict=True)
        assert [s[c] for s in sols] == [sp.Rational(1, 2)]
        locus = shift_nilpotency_locus(euclid)
        assert locus.values == frozenset({Fraction(1, 2)})
        assert locus.mirrored() == frozenset({Fraction(-1, 2)})


class TestPsi:
    @pytest.mark.parametrize("name", ["h3", "h3xR", "R3"])
    def test_morphism_on_two_step(self, name):
        assert psi_is_morphism(ALG[name]).ok

    def test_fails_on_three_step(self):
        n4 = ALG["n4"]
        rep = psi_is_morphism(n4)
        assert not rep.ok
        a, b = rep.pair
        assert a == AffElement(n4.basis(0), PolyMatrix.zeros(n4.ctx, 4))
        assert b == AffElement(n4.basis(1), PolyMatrix.zeros(n4.ctx, 4))
        quarter = ad_matrix(n4, n4.basis(2)).scale(Fraction(-1, 4))
        assert rep.defect == AffElement(n4.zero_vector(), quarter)

    def test_psi_keeps_translation(self):
        a = AffElement(H3.basis(0), PolyMatrix.zeros(CTX3, 3))
        assert psi(H3, a).translation == H3.basis(0)

    def test_composite_is_affine_embedding(self):
        e = euclid_embedding()
        V = abelian(3, CTX3)
        D = [psi(H3, e.image_of_basis(i)).derivation for i in range(3)]
        assert check_morphism(Embedding(e.source, V, e.t, D)).ok


def two_step_rows():
    out = []
    for r in ROWS:
        vals = row_params(r)
        if nilpotency_class(r.embedding.target.instantiate(vals)) in (1, 2):
            out.append(r)
    return out


@pytest.mark.parametrize("row", two_step_rows(), ids=lambda r: r.id)
def test_ls_push_is_left_symmetric_and_completeness_matches(row):
    vals = row_params(row)
    p = induce_plas(row.embedding.instantiate(vals))
    ls = psi_push(p)
    assert verify_ls(ls).ok
    # completeness of the PLAS is completeness of the pushed LS structure
    assert complete_2step(p) == right_complete(ls)
    assert is_nilpotent(right_mult(ls, tuple(p.ctx.symbol(f"y{i}") for i in range(1, p.dim + 1)))) \
        == complete_2step(p)


@pytest.mark.parametrize("rid", ["Aux.h3_trivial", "Aux.h3_opposite", "Aux.R3_h3"])
def test_nilpotent_g_shifted_equals_left_nilpotent(rid):
    p = induce_plas(get_row(ROWS, rid).embedding)
    assert nilpotency_class(p.g) is not None
    rep = completeness_report(p)
    assert rep.shifted_nilpotent == rep.left_nilpotent


def test_preconditions_on_three_step():
    row = get_row(ROWS, "Ex5.2")
    p = induce_plas(row.embedding.instantiate(row_params(row)))
    with pytest.raises(PreconditionError):
        complete_2step(p)
    with pytest.raises(PreconditionError):
        psi_push(p)
    rep = completeness_report(p)
    assert rep.h_class == 3 and rep.caveat
    assert not rep.shifted_nilpotent


def test_induced_bracket_from_left():
    L = mat(CTX3, EUCLID_L)
    p = PlasStructure.from_generic_left(None, H3, L, induced=True)
    assert verify_plas(p).ok
    assert p.g.structure(0, 2) == (CTX3.zero(), CTX3.const(-1), CTX3.zero())


def test_left_not_derivation_fails_axiom3():
    L = mat(CTX3, "x1 0 0; 0 0 0; 0 0 0")
    p = PlasStructure.from_generic_left(None, H3, L, induced=True)
    rep = verify_plas(p)
    assert not rep.axioms[2] and any("axiom 3" in w for w in rep.witnesses)


def test_wrong_g_fails_axiom1(euclid):
    p = PlasStructure(abelian(3, CTX3), H3, euclid.product)
    rep = verify_plas(p)
    assert not rep.axioms[0]
    with pytest.raises(StructureError):
        PlasStructure(abelian(3, CTX3), H3, euclid.product, check=True)


def test_trivial_product_on_abelian_locus_is_everything():
    V = abelian(3, CTX3)
    zero = [[V.zero_vector() for _ in range(3)] for _ in range(3)]
    p = PlasStructure(V, V, zero)
    assert shift_nilpotency_locus(p).values == ALL
    assert right_nilpotency_probe(p) == {"right_nilpotent": True, "complete": True}


def test_bracket_from_product_is_jacobi_clean(euclid):
    left = [left_mult(euclid, euclid.basis(i)) for i in range(3)]
    g = bracket_from_product(H3, left)
    assert g.constants == euclid.g.constants
