"""The affine Lie algebra aff(h) = h ⋊ Der(h) and maps g -> aff(h)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import qlinalg
from .lie import LieAlgebra, bracket, derivation_defects, is_derivation
from .matrix import DimensionError, PolyMatrix, determinant
from .poly import MultiPoly


class AffineError(Exception):
    pass


class NotBijectiveError(AffineError):
    pass


@dataclass(frozen=True)
class AffElement:
    """(x, D) with x in h and D a derivation of h."""

    translation: tuple[MultiPoly, ...]
    derivation: PolyMatrix

    def __add__(self, other: "AffElement") -> "AffElement":
        return AffElement(tuple(a + b for a, b in zip(self.translation, other.translation)),
                          self.derivation + other.derivation)

    def __sub__(self, other: "AffElement") -> "AffElement":
        return AffElement(tuple(a - b for a, b in zip(self.translation, other.translation)),
                          self.derivation - other.derivation)

    def scale(self, c) -> "AffElement":
        return AffElement(tuple(a * c for a in self.translation), self.derivation.scale(c))

    def is_zero(self) -> bool:
        return not any(self.translation) and self.derivation.is_zero()

    def format(self) -> str:
        x = ", ".join(str(v) for v in self.translation)
        return f"(({x}), {self.derivation.to_strings()})"


def aff_zero(h: LieAlgebra) -> AffElement:
    return AffElement(h.zero_vector(), PolyMatrix.zeros(h.ctx, h.dim))


def aff_bracket(h: LieAlgebra, a: AffElement, b: AffElement, check: bool = True) -> AffElement:
    """[(x, D), (x', D')] = ([x, x']_h + D x' - D' x, D D' - D' D)."""
    for el in (a, b):
        if len(el.translation) != h.dim or el.derivation.shape != (h.dim, h.dim):
            raise DimensionError(f"element does not live in aff({h.name})")
        if check and not is_derivation(h, el.derivation):
            raise AffineError(f"derivation part is not a derivation of {h.name}")
    x, d = a.translation, a.derivation
    y, e = b.translation, b.derivation
    xy = bracket(h, x, y)
    dy = d.apply(y)
    ex = e.apply(x)
    trans = tuple(p + q - r for p, q, r in zip(xy, dy, ex))
    return AffElement(trans, d @ e - e @ d)


def aff_to_matrix(a: AffElement) -> PolyMatrix:
    """(x, D) as the block matrix [[D, x], [0, 0]]."""
    return a.derivation.block(a.translation)


class Embedding:
    """phi = (t, D): g -> aff(h), stored by the images of the basis of g.

    ``t`` is the matrix of the linear part (column i = t(e_i)); ``D[i]`` is
    the derivation D(e_i).
    """

    def __init__(self, source: LieAlgebra, target: LieAlgebra, t: PolyMatrix,
                 D: Sequence[PolyMatrix]):
        n = source.dim
        if target.dim != n:
            raise DimensionError(f"dim {source.name} = {n} but dim {target.name} = {target.dim}")
        if source.ctx != target.ctx:
            raise AffineError("source and target algebras must share a symbol context")
        if t.shape != (n, n) or len(D) != n or any(d.shape != (n, n) for d in D):
            raise DimensionError("t must be n x n and D must hold n matrices of size n x n")
        self.source = source
        self.target = target
        self.ctx = source.ctx
        self.t = t.lift(self.ctx)
        self.D = tuple(d.lift(self.ctx) for d in D)

    @classmethod
    def from_generic(cls, source: LieAlgebra, target: LieAlgebra,
                     t_of_x: Sequence[MultiPoly], D_of_x: PolyMatrix, symbol: str = "x") -> "Embedding":
        """Build from t(x) and D(x) written linearly in the coordinates x1..xn."""
        n = source.dim
        names = [f"{symbol}{i}" for i in range(1, n + 1)]
        t_cols = [[c.diff(v) for c in t_of_x] for v in names]
        d_mats = [D_of_x.map(lambda c, v=v: c.diff(v)) for v in names]
        emb = cls(source, target, PolyMatrix.from_columns(source.ctx, t_cols), d_mats)
        # linear and homogeneous in x: reconstructing must give back the input
        x = source.generic(symbol)
        img = emb.image(x)
        if img.translation != tuple(t_of_x) or img.derivation != D_of_x:
            raise AffineError("t(x) and D(x) must be homogeneous linear in the coordinates")
        return emb

    @property
    def dim(self) -> int:
        return self.source.dim

    def image(self, v: Sequence[MultiPoly]) -> AffElement:
        if len(v) != self.dim:
            raise DimensionError("vector length does not match source dimension")
        trans = self.t.apply(v)
        der = PolyMatrix.zeros(self.ctx, self.dim)
        for c, d in zip(v, self.D):
            if c:
                der = der + d.scale(c)
        return AffElement(trans, der)

    def image_of_basis(self, i: int) -> AffElement:
        return AffElement(self.t.column(i), self.D[i])

    def instantiate(self, values: Mapping[str, Fraction]) -> "Embedding":
        vals = {k: v for k, v in values.items() if k in self.ctx}
        return Embedding(self.source.instantiate(vals), self.target.instantiate(vals),
                         self.t.subs(vals), [d.subs(vals) for d in self.D])

    def generic_t(self, symbol: str = "x") -> tuple[MultiPoly, ...]:
        return self.t.apply(self.source.generic(symbol))

    def generic_D(self, symbol: str = "x") -> PolyMatrix:
        return self.image(self.source.generic(symbol)).derivation


@dataclass
class MorphismReport:
    ok: bool
    derivations_ok: bool
    bad_derivations: list[int] = field(default_factory=list)
    pair: tuple[int, int] | None = None
    defect: AffElement | None = None

    def describe(self) -> str:
        if self.ok:
            return "morphism: ok"
        if not self.derivations_ok:
            return "morphism: D(e_i) not a derivation for i in " + str([i + 1 for i in self.bad_derivations])
        i, j = self.pair
        return f"morphism: fails on (e{i + 1}, e{j + 1}), defect {self.defect.format()}"


def check_morphism(e: Embedding) -> MorphismReport:
    """phi([e_i, e_j]_g) = [phi(e_i), phi(e_j)]_aff(h) for every basis pair.

    The reported defect is [phi(e_i), phi(e_j)] - phi([e_i, e_j]).
    """
    h = e.target
    bad = [i for i, d in enumerate(e.D) if derivation_defects(h, d)]
    if bad:
        return MorphismReport(False, False, bad)
    n = e.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = e.image(e.source.structure(i, j))
            rhs = aff_bracket(h, e.image_of_basis(i), e.image_of_basis(j), check=False)
            defect = rhs - lhs
            if not defect.is_zero():
                return MorphismReport(False, True, [], (i, j), defect)
    return MorphismReport(True, True)


@dataclass
class TBijectivity:
    det: MultiPoly
    bijective: bool | None
    symbolic: bool
    samples: dict = field(default_factory=dict)

    def describe(self) -> str:
        return f"det t = {self.det}; bijective: {self.bijective}"


def t_bijective(e: Embedding, params: Mapping[str, Fraction] | None = None) -> TBijectivity:
    """Determinant of t; bijective iff it is a nonzero constant, or nonzero at
    the supplied parameter values when it depends on parameters."""
    d = determinant(e.t)
    if d.is_constant():
        return TBijectivity(d, bool(d), False)
    if not params:
        return TBijectivity(d, None, True)
    val = d.eval(params)
    return TBijectivity(d, val != 0, True, {k: str(v) for k, v in params.items()})


def injectivity_rank(e: Embedding, params: Mapping[str, Fraction] | None = None) -> int:
    """Rank of x -> (t(x), D(x)) at the given parameter values."""
    params = dict(params or {})
    rows = []
    for i in range(e.dim):
        img = e.image_of_basis(i)
        flat = list(img.translation) + [c for r in img.derivation.tolist() for c in r]
        rows.append([c.eval(params) for c in flat])
    return qlinalg.rank(rows)


def induce_bracket(e: Embedding, name: str | None = None) -> LieAlgebra:
    """Transport the bracket of the image subalgebra to V via t:

        [x, y] = p([phi(t^-1 x), phi(t^-1 y)]_aff(h)),

    with p the projection on the translation part.  Requires t to have a
    nonzero constant determinant (instantiate parameters first otherwise).
    """
    try:
        tinv = e.t.inverse()
    except ZeroDivisionError as exc:
        raise NotBijectiveError(str(exc)) from None
    h = e.target
    n = e.dim
    preimages = [tinv.column(i) for i in range(n)]
    images = [e.image(p) for p in preimages]
    consts = {}
    for i in range(n):
        for j in range(i + 1, n):
            br = aff_bracket(h, images[i], images[j], check=False)
            consts[(i, j)] = br.translation
    params = e.source.params + tuple(p for p in e.target.params if p not in e.source.params)
    # re-verified rather than trusted: a bad transcription surfaces as a JacobiError
    return LieAlgebra(name or f"{e.source.name}~", n, consts, params, e.ctx, check=True)
