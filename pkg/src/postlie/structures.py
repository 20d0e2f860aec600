"""Post-Lie (PLAS) and left-symmetric (LS) products and their completeness tests.

A product on V is stored as a tensor: ``product[i][j]`` is the coordinate
vector of e_i . e_j.  Left and right multiplications both derive from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import qlinalg
from .affine import (AffElement, Embedding, NotBijectiveError, aff_bracket, check_morphism,
                     induce_bracket)
from .lie import (LieAlgebra, abelian, ad_matrix, bracket, check_jacobi, derivation_basis,
                  derivation_defects, nilpotency_class)
from .matrix import CharPoly, DimensionError, PolyMatrix, char_poly, determinant, is_nilpotent
from .poly import Context, MultiPoly

Tensor = tuple[tuple[tuple[MultiPoly, ...], ...], ...]


class StructureError(Exception):
    pass


class PreconditionError(StructureError):
    pass


def _tensor(ctx: Context, dim: int, product) -> Tensor:
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            v = product[i][j]
            if len(v) != dim:
                raise DimensionError("product tensor has the wrong shape")
            row.append(tuple(c if isinstance(c, MultiPoly) and c.ctx == ctx else
                             (c.lift(ctx) if isinstance(c, MultiPoly) else MultiPoly.constant(ctx, c))
                             for c in v))
        rows.append(tuple(row))
    return tuple(rows)


class _Product:
    dim: int
    ctx: Context
    product: Tensor

    def multiply(self, a: Sequence[MultiPoly], b: Sequence[MultiPoly]) -> tuple[MultiPoly, ...]:
        if len(a) != self.dim or len(b) != self.dim:
            raise DimensionError("vector length does not match the structure")
        out = [self.ctx.zero()] * self.dim
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                f = ai * bj
                for k, c in enumerate(self.product[i][j]):
                    if c:
                        out[k] = out[k] + f * c
        return tuple(out)

    def basis(self, i):
        return tuple(self.ctx.one() if k == i else self.ctx.zero() for k in range(self.dim))

    def is_zero_product(self) -> bool:
        return not any(c for row in self.product for v in row for c in v)


class PlasStructure(_Product):
    """Product on V together with the two brackets g (``g``) and h (``h``)."""

    def __init__(self, g: LieAlgebra, h: LieAlgebra, product, check: bool = False):
        if g.dim != h.dim:
            raise DimensionError("g and h must have the same dimension")
        if g.ctx != h.ctx:
            raise StructureError("g and h must share a symbol context")
        self.g = g
        self.h = h
        self.dim = g.dim
        self.ctx = g.ctx
        self.product = _tensor(self.ctx, self.dim, product)
        if check:
            rep = verify_plas(self)
            if not rep.ok:
                raise StructureError(f"not a post-Lie structure: {rep.describe()}")

    @classmethod
    def from_left(cls, g: LieAlgebra, h: LieAlgebra, left: Sequence[PolyMatrix]) -> "PlasStructure":
        """Build from L_{e_1}, ..., L_{e_n}."""
        return cls(g, h, [[left[i].column(j) for j in range(g.dim)] for i in range(g.dim)])

    @classmethod
    def from_generic_left(cls, g: LieAlgebra, h: LieAlgebra, L: PolyMatrix, symbol: str = "x",
                          induced: bool = False) -> "PlasStructure":
        """Build from L_x written linearly in x1..xn; with ``induced`` the g
        bracket is recomputed from axiom (1)."""
        names = [f"{symbol}{i}" for i in range(1, h.dim + 1)]
        left = [L.map(lambda c, v=v: c.diff(v)) for v in names]
        if induced:
            g = bracket_from_product(h, left)
        return cls.from_left(g, h, left)


class LsStructure(_Product):
    """Left-symmetric product on the Lie algebra ``g``."""

    def __init__(self, g: LieAlgebra, product):
        self.g = g
        self.dim = g.dim
        self.ctx = g.ctx
        self.product = _tensor(self.ctx, self.dim, product)


def bracket_from_product(h: LieAlgebra, left: Sequence[PolyMatrix], name: str = "g") -> LieAlgebra:
    """[x, y]_g = x.y - y.x + [x, y]_h on the basis."""
    n = h.dim
    consts = {}
    for i in range(n):
        for j in range(i + 1, n):
            xy = left[i].column(j)
            yx = left[j].column(i)
            hij = h.structure(i, j)
            consts[(i, j)] = tuple(a - b + c for a, b, c in zip(xy, yx, hij))
    return LieAlgebra(name, n, consts, h.params, h.ctx, check=False)


def left_mult(p: _Product, x: Sequence[MultiPoly]) -> PolyMatrix:
    """Matrix of y -> x . y."""
    cols = [p.multiply(x, p.basis(j)) for j in range(p.dim)]
    return PolyMatrix.from_columns(p.ctx, cols)


def right_mult(p: _Product, y: Sequence[MultiPoly]) -> PolyMatrix:
    """Matrix of x -> x . y."""
    cols = [p.multiply(p.basis(i), y) for i in range(p.dim)]
    return PolyMatrix.from_columns(p.ctx, cols)


def _generic(p: _Product, symbol: str):
    return tuple(p.ctx.symbol(f"{symbol}{i}") for i in range(1, p.dim + 1))


def induce_plas(e: Embedding) -> PlasStructure:
    """PLAS with L_x = D(t^-1 x) and g the bracket transported by t."""
    rep = check_morphism(e)
    if not rep.ok:
        raise StructureError(f"embedding is not a Lie algebra morphism: {rep.describe()}")
    try:
        tinv = e.t.inverse()
    except ZeroDivisionError as exc:
        raise NotBijectiveError(str(exc)) from None
    n = e.dim
    left = []
    for i in range(n):
        left.append(e.image(tinv.column(i)).derivation)
    g = induce_bracket(e, name=f"{e.source.name}~")
    return PlasStructure.from_left(g, e.target, left)


# -- axiom verification --------------------------------------------------------

@dataclass
class AxiomReport:
    axioms: tuple[bool, bool, bool]
    witnesses: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.axioms)

    def describe(self) -> str:
        flags = ", ".join(f"({k}) {'ok' if v else 'FAILS'}" for k, v in enumerate(self.axioms, 1))
        if self.witnesses:
            flags += "; " + "; ".join(self.witnesses)
        return flags


def _fmt(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


def verify_plas(p: PlasStructure) -> AxiomReport:
    """Check the three axioms on basis elements (all three are multilinear):

    (1) x.y - y.x = [x, y]_g - [x, y]_h
    (2) [x, y]_g . z = x.(y.z) - y.(x.z)
    (3) each L_{e_i} is a derivation of h
    """
    n = p.dim
    e = [p.basis(i) for i in range(n)]
    witnesses = []
    ax1 = True
    for i in range(n):
        for j in range(i + 1, n):
            lhs = tuple(a - b for a, b in zip(p.multiply(e[i], e[j]), p.multiply(e[j], e[i])))
            rhs = tuple(a - b for a, b in zip(p.g.structure(i, j), p.h.structure(i, j)))
            if lhs != rhs:
                ax1 = False
                witnesses.append(f"axiom 1 fails on (e{i + 1}, e{j + 1}): {_fmt(lhs)} != {_fmt(rhs)}")
                break
        if not ax1:
            break
    ax2 = _check_axiom2(p, e, witnesses)
    ax3 = True
    for i in range(n):
        bad = derivation_defects(p.h, left_mult(p, e[i]))
        if bad:
            ax3 = False
            (a, b), _ = bad[0]
            witnesses.append(f"axiom 3 fails: L_e{i + 1} is not a derivation on (e{a + 1}, e{b + 1})")
            break
    return AxiomReport((ax1, ax2, ax3), witnesses)


def _check_axiom2(p, e, witnesses) -> bool:
    n = p.dim
    for i in range(n):
        for j in range(i + 1, n):
            gij = p.g.structure(i, j)
            for k in range(n):
                lhs = p.multiply(gij, e[k])
                rhs = tuple(a - b for a, b in zip(p.multiply(e[i], p.multiply(e[j], e[k])),
                                                  p.multiply(e[j], p.multiply(e[i], e[k]))))
                if lhs != rhs:
                    witnesses.append(f"axiom 2 fails on (e{i + 1}, e{j + 1}, e{k + 1}): "
                                     f"{_fmt(lhs)} != {_fmt(rhs)}")
                    return False
    return True


def verify_ls(s: LsStructure) -> AxiomReport:
    """x.y - y.x = [x, y]_g and [x, y]_g . z = x.(y.z) - y.(x.z)."""
    n = s.dim
    e = [s.basis(i) for i in range(n)]
    witnesses = []
    ax1 = True
    for i in range(n):
        for j in range(i + 1, n):
            lhs = tuple(a - b for a, b in zip(s.multiply(e[i], e[j]), s.multiply(e[j], e[i])))
            if lhs != s.g.structure(i, j):
                ax1 = False
                witnesses.append(f"axiom 1 fails on (e{i + 1}, e{j + 1})")
                break
        if not ax1:
            break
    ax2 = _check_axiom2(s, e, witnesses)
    return AxiomReport((ax1, ax2, True), witnesses)


# -- the push-forward to left-symmetric structures --------------------------------

def _h_class(h: LieAlgebra, params: Mapping[str, Fraction] | None) -> int | None:
    return nilpotency_class(h.instantiate(dict(params or {})))


def _require_two_step(h: LieAlgebra, params=None):
    cls = _h_class(h, params)
    if cls is None or cls > 2:
        what = "not nilpotent" if cls is None else f"{cls}-step nilpotent"
        raise PreconditionError(f"{h.name} is {what}; a 2-step nilpotent h is required")


def psi_push(p: PlasStructure, params: Mapping[str, Fraction] | None = None) -> LsStructure:
    """LS on g with product x.y + 1/2 [x, y]_h (so L~ = L + 1/2 ad, R~ = R - 1/2 ad)."""
    _require_two_step(p.h, params)
    half = Fraction(1, 2)
    n = p.dim
    prod = [[tuple(a + b * half for a, b in zip(p.product[i][j], p.h.structure(i, j)))
             for j in range(n)] for i in range(n)]
    return LsStructure(p.g, prod)


def psi(h: LieAlgebra, a: AffElement) -> AffElement:
    """(x, D) -> (x, D + 1/2 ad_x), landing in aff(V) for abelian V."""
    return AffElement(a.translation, a.derivation + ad_matrix(h, a.translation).scale(Fraction(1, 2)))


@dataclass
class PsiReport:
    ok: bool
    pair: tuple[AffElement, AffElement] | None = None
    pair_label: str | None = None
    defect: AffElement | None = None


def psi_is_morphism(h: LieAlgebra) -> PsiReport:
    """Compare psi([a, b]_aff(h)) with [psi a, psi b]_aff(V) on the pairs
    ((e_i,0),(e_j,0)), ((e_i,0),(0,D_k)), ((0,D_k),(0,D_l)), D_k running over a
    basis of Der(h).  The defect is [psi a, psi b] - psi([a, b])."""
    n = h.dim
    V = abelian(n, h.ctx)
    zero_m = PolyMatrix.zeros(h.ctx, n)
    zero_v = h.zero_vector()
    trans = [(f"(f{i + 1},0)", AffElement(h.basis(i), zero_m)) for i in range(n)]
    ders = [(f"(0,D{k + 1})", AffElement(zero_v, d)) for k, d in enumerate(derivation_basis(h))]
    pairs = []
    pairs += [(trans[i], trans[j]) for i in range(n) for j in range(i + 1, n)]
    pairs += [(a, b) for a in trans for b in ders]
    pairs += [(ders[k], ders[l]) for k in range(len(ders)) for l in range(k + 1, len(ders))]
    for (la, a), (lb, b) in pairs:
        lhs = psi(h, aff_bracket(h, a, b, check=False))
        rhs = aff_bracket(V, psi(h, a), psi(h, b), check=False)
        d = rhs - lhs
        if not d.is_zero():
            return PsiReport(False, (a, b), f"({la}, {lb})", d)
    return PsiReport(True)


# -- completeness ------------------------------------------------------------

def shifted_right(p: PlasStructure, symbol: str = "y", shift: Fraction = Fraction(1, 2)) -> PolyMatrix:
    """R_y - shift * ad^h_y for generic y."""
    y = _generic(p, symbol)
    return right_mult(p, y) - ad_matrix(p.h, y).scale(shift)


def complete_2step(p: PlasStructure, params: Mapping[str, Fraction] | None = None) -> bool:
    """R_y - 1/2 ad_y nilpotent for every y (h abelian or 2-step nilpotent)."""
    _require_two_step(p.h, params)
    return is_nilpotent(shifted_right(p))


def right_complete(s: _Product) -> bool:
    """R_y nilpotent for every y."""
    return is_nilpotent(right_mult(s, _generic(s, "y")))


def left_complete(s: _Product) -> bool:
    """L_x nilpotent for every x."""
    return is_nilpotent(left_mult(s, _generic(s, "x")))


@dataclass
class CompletenessReport:
    right_nilpotent: bool
    left_nilpotent: bool
    shifted_nilpotent: bool
    unit_shift_det: MultiPoly
    h_class: int | None
    caveat: str | None = None

    @property
    def unit_shift_complete(self) -> bool:
        # det(I + R~_{sy}) = det(I + s R~_y) is identically 1 iff R~_y is nilpotent
        return self.unit_shift_det == 1

    def as_dict(self) -> dict:
        return {
            "right_nilpotent": self.right_nilpotent,
            "left_nilpotent": self.left_nilpotent,
            "shifted_nilpotent": self.shifted_nilpotent,
            "unit_shift_det": str(self.unit_shift_det),
            "unit_shift_complete": self.unit_shift_complete,
            "h_nilpotency_class": self.h_class,
            "caveat": self.caveat,
        }


def completeness_report(p: PlasStructure, params: Mapping[str, Fraction] | None = None
                        ) -> CompletenessReport:
    """All four completeness-type tests.  The shifted criterion is computed even
    when h is not 2-step; the caveat says so."""
    y = _generic(p, "y")
    R = right_mult(p, y)
    shifted = R - ad_matrix(p.h, y).scale(Fraction(1, 2))
    try:
        cls = _h_class(p.h, params)
    except Exception:  # symbolic parameters left in h
        cls = None
    caveat = None
    if cls is None:
        caveat = "h nilpotency class unknown or h not nilpotent; shifted criterion not characterising"
    elif cls > 2:
        caveat = f"h is {cls}-step nilpotent; the shifted criterion is only meaningful for 2-step h"
    det = determinant(PolyMatrix.identity(p.ctx, p.dim) + shifted)
    return CompletenessReport(is_nilpotent(R), left_complete(p), is_nilpotent(shifted), det, cls, caveat)


ALL = "all"


@dataclass
class ShiftLocus:
    values: frozenset | str  # frozenset of Fractions, or ALL
    convention: str = "R_y - c*ad_y"

    def mirrored(self):
        """The same locus under the convention R_y + c*ad_y."""
        if self.values == ALL:
            return ALL
        return frozenset(-v for v in self.values)

    def describe(self) -> str:
        def fmt(vals):
            return vals if vals == ALL else "{" + ", ".join(str(v) for v in sorted(vals)) + "}"
        return (f"c with {self.convention} nilpotent: {fmt(self.values)} "
                f"(equivalently {fmt(self.mirrored())} for R_y + c*ad_y)")


def shift_nilpotency_locus(p: PlasStructure, params: Mapping[str, Fraction] | None = None) -> ShiftLocus:
    """Rational c such that R_y - c ad_y is nilpotent identically in y.

    c is adjoined as an extra symbol; every y-coefficient of every entry of
    (R_y - c ad_y)^n is a polynomial in c, and the answer is the set of rational
    roots of their gcd.
    """
    params = dict(params or {})
    cname = "shift_c"
    while cname in p.ctx:
        cname += "_"
    ext = Context(p.ctx.names + (cname,))
    y = _generic(p, "y")
    R = right_mult(p, y).lift(ext)
    ad = ad_matrix(p.h, y).lift(ext)
    c = ext.symbol(cname)
    S = R - ad.scale(c)
    if params:
        S = S.subs({k: v for k, v in params.items() if k in ext})
    power = S ** p.dim
    ynames = [f"y{i}" for i in range(1, p.dim + 1)]
    g: list = []
    for row in power.tolist():
        for entry in row:
            for coeff in entry.coefficients_in(ynames).values():
                extra = coeff.free_symbols() - {cname}
                if extra:
                    raise PreconditionError(f"instantiate parameters {sorted(extra)} first")
                g = qlinalg.ugcd(g, _univariate(coeff, cname))
    if not g:
        return ShiftLocus(ALL)
    return ShiftLocus(frozenset(qlinalg.rational_roots(g)))


def _univariate(poly: MultiPoly, name: str) -> list[Fraction]:
    i = poly.ctx.index(name)
    out = [Fraction(0)] * (max((e[i] for e, _ in poly.items()), default=-1) + 1)
    for e, c in poly.items():
        out[e[i]] += c
    return qlinalg.utrim(out)


def right_nilpotency_probe(p: PlasStructure, params: Mapping[str, Fraction] | None = None) -> dict:
    """Evidence gathering on nilpotent pairs: does R_y nilpotency agree with
    completeness?  Never asserts an answer."""
    return {
        "right_nilpotent": right_complete(p),
        "complete": complete_2step(p, params),
    }
