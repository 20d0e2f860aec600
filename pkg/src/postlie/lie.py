"""Lie algebras given by structure constants on a fixed basis e_1..e_n."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from . import qlinalg
from .matrix import DimensionError, PolyMatrix
from .poly import Context, MultiPoly, standard_context

Vector = tuple[MultiPoly, ...]


class LieAlgebraError(Exception):
    pass


class JacobiError(LieAlgebraError):
    pass


class RequiresInstantiationError(LieAlgebraError):
    pass


class LieAlgebra:
    """Structure constants c_ij^k stored for i < j only (0-based internally).

    ``constants[(i, j)]`` is the coordinate vector of [e_i, e_j]; missing
    pairs bracket to zero.  Constants may involve the symbols in ``params``.
    """

    def __init__(self, name: str, dim: int, constants: Mapping[tuple[int, int], Sequence],
                 params: Sequence[str] = (), ctx: Context | None = None, check: bool = True):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.name = name
        self.dim = dim
        self.params = tuple(params)
        self.ctx = ctx if ctx is not None else standard_context(dim, self.params)
        for p in self.params:
            self.ctx.index(p)
        consts = {}
        for (i, j), vec in constants.items():
            if not (0 <= i < j < dim):
                raise LieAlgebraError(f"bracket index pair ({i + 1}, {j + 1}) must satisfy 1 <= i < j <= {dim}")
            if len(vec) != dim:
                raise DimensionError(f"bracket [e{i + 1}, e{j + 1}] has {len(vec)} coordinates, expected {dim}")
            v = tuple(_as_poly(self.ctx, c) for c in vec)
            if any(v):
                consts[(i, j)] = v
        self.constants = consts
        if check:
            bad = jacobi_defects(self)
            if bad:
                (i, j, k), vec = bad[0]
                raise JacobiError(f"{name}: Jacobi identity fails on (e{i + 1}, e{j + 1}, e{k + 1}): "
                                  f"{[str(c) for c in vec]}")

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim}, params={list(self.params)})"

    def zero_vector(self) -> Vector:
        return (self.ctx.zero(),) * self.dim

    def basis(self, i: int) -> Vector:
        return tuple(self.ctx.one() if k == i else self.ctx.zero() for k in range(self.dim))

    def generic(self, symbol: str = "x") -> Vector:
        return generic_vector(self.ctx, symbol, self.dim)

    def structure(self, i: int, j: int) -> Vector:
        """[e_i, e_j] with antisymmetric completion."""
        if i == j:
            return self.zero_vector()
        if i < j:
            return self.constants.get((i, j), self.zero_vector())
        return tuple(-c for c in self.constants.get((j, i), self.zero_vector()))

    def is_abelian(self) -> bool:
        return not self.constants

    def in_context(self, ctx: Context) -> "LieAlgebra":
        if ctx == self.ctx:
            return self
        consts = {k: tuple(c.lift(ctx) for c in v) for k, v in self.constants.items()}
        return LieAlgebra(self.name, self.dim, consts, self.params, ctx, check=False)

    def instantiate(self, values: Mapping[str, Fraction]) -> "LieAlgebra":
        """Substitute rational values for (some of) the parameters; context is kept."""
        vals = {k: v for k, v in values.items() if k in self.params}
        if not vals:
            return self
        consts = {k: tuple(c.subs(vals) for c in v) for k, v in self.constants.items()}
        params = tuple(p for p in self.params if p not in vals)
        return LieAlgebra(self.name, self.dim, consts, params, self.ctx, check=False)

    def is_constant(self) -> bool:
        return all(c.is_constant() for v in self.constants.values() for c in v)

    def negated(self, name: str | None = None) -> "LieAlgebra":
        consts = {k: tuple(-c for c in v) for k, v in self.constants.items()}
        return LieAlgebra(name or f"-{self.name}", self.dim, consts, self.params, self.ctx, check=False)


def _as_poly(ctx, c):
    if isinstance(c, MultiPoly):
        return c if c.ctx == ctx else c.lift(ctx)
    if isinstance(c, str):
        return ctx.parse(c)
    return MultiPoly.constant(ctx, c)


def generic_vector(ctx: Context, symbol: str, dim: int) -> Vector:
    return tuple(ctx.symbol(f"{symbol}{i}") for i in range(1, dim + 1))


def abelian(dim: int, ctx: Context | None = None, name: str | None = None) -> LieAlgebra:
    return LieAlgebra(name or f"R{dim}", dim, {}, (), ctx or standard_context(dim))


def _check_vec(alg: LieAlgebra, v: Sequence) -> None:
    if len(v) != alg.dim:
        raise DimensionError(f"vector of length {len(v)} for {alg.dim}-dimensional {alg.name}")


def bracket(alg: LieAlgebra, a: Sequence[MultiPoly], b: Sequence[MultiPoly]) -> Vector:
    """Bilinear expansion of [a, b] over the stored constants."""
    _check_vec(alg, a)
    _check_vec(alg, b)
    out = list(alg.zero_vector())
    for (i, j), c in alg.constants.items():
        coeff = a[i] * b[j] - a[j] * b[i]
        if not coeff:
            continue
        for k, ck in enumerate(c):
            if ck:
                out[k] = out[k] + coeff * ck
    return tuple(out)


def jacobi_defects(alg: LieAlgebra) -> list[tuple[tuple[int, int, int], Vector]]:
    """All basis triples i < j < k whose cyclic Jacobi sum is nonzero."""
    bad = []
    n = alg.dim
    e = [alg.basis(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s1 = bracket(alg, e[i], bracket(alg, e[j], e[k]))
                s2 = bracket(alg, e[j], bracket(alg, e[k], e[i]))
                s3 = bracket(alg, e[k], bracket(alg, e[i], e[j]))
                total = tuple(a + b + c for a, b, c in zip(s1, s2, s3))
                if any(total):
                    bad.append(((i, j, k), total))
    return bad


def check_jacobi(alg: LieAlgebra) -> bool:
    return not jacobi_defects(alg)


def ad_matrix(alg: LieAlgebra, v: Sequence[MultiPoly]) -> PolyMatrix:
    """Matrix of w -> [v, w]."""
    _check_vec(alg, v)
    cols = [bracket(alg, v, alg.basis(j)) for j in range(alg.dim)]
    return PolyMatrix.from_columns(alg.ctx, cols)


def derivation_defects(alg: LieAlgebra, m: PolyMatrix) -> list[tuple[tuple[int, int], Vector]]:
    if m.shape != (alg.dim, alg.dim):
        raise DimensionError(f"{m.shape} matrix is not an endomorphism of {alg.name}")
    bad = []
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            ei, ej = alg.basis(i), alg.basis(j)
            lhs = m.apply(alg.structure(i, j))
            rhs1 = bracket(alg, m.column(i), ej)
            rhs2 = bracket(alg, ei, m.column(j))
            d = tuple(a - b - c for a, b, c in zip(lhs, rhs1, rhs2))
            if any(d):
                bad.append(((i, j), d))
    return bad


def is_derivation(alg: LieAlgebra, m: PolyMatrix) -> bool:
    """M[e_i, e_j] = [M e_i, e_j] + [e_i, M e_j] for all basis pairs, symbolically."""
    return not derivation_defects(alg, m.lift(alg.ctx) if m.ctx != alg.ctx else m)


# -- series (instantiated algebras only) ---------------------------------------

def _constant_table(alg: LieAlgebra):
    if not alg.is_constant():
        raise RequiresInstantiationError(
            f"{alg.name} has symbolic structure constants {sorted(alg.params)}; instantiate them first")
    n = alg.dim
    return [[[c.constant_value() for c in alg.structure(i, j)] for j in range(n)] for i in range(n)]


def _qbracket(table, a, b):
    n = len(table)
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if not bj:
                continue
            f = ai * bj
            for k, c in enumerate(table[i][j]):
                if c:
                    out[k] += f * c
    return out


def _span(vectors):
    return qlinalg.rref(vectors)[0] if vectors else []


def lower_central_series(alg: LieAlgebra) -> list[int]:
    """Dimensions of g = gamma_1 ⊇ gamma_2 = [g, g] ⊇ gamma_3 = [g, gamma_2] ⊇ ...

    Stops at 0 or as soon as the dimension stops dropping.
    """
    table = _constant_table(alg)
    n = alg.dim
    basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    current = basis
    dims = [n]
    while dims[-1] > 0:
        gens = [_qbracket(table, e, w) for e in basis for w in current]
        current = _span(gens)
        if len(current) == dims[-1]:
            break
        dims.append(len(current))
    return dims


def nilpotency_class(alg: LieAlgebra) -> int | None:
    """Number of nonzero terms of the lower central series; None if not nilpotent.

    Abelian algebras have class 1, the Heisenberg algebra class 2.
    """
    dims = lower_central_series(alg)
    if dims[-1] != 0:
        return None
    return len(dims) - 1


def is_nilpotent_algebra(alg: LieAlgebra) -> bool:
    return nilpotency_class(alg) is not None


def derived_series(alg: LieAlgebra) -> list[int]:
    table = _constant_table(alg)
    n = alg.dim
    current = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    dims = [n]
    while dims[-1] > 0:
        gens = [_qbracket(table, u, w) for u in current for w in current]
        current = _span(gens)
        if len(current) == dims[-1]:
            break
        dims.append(len(current))
    return dims


def is_solvable(alg: LieAlgebra) -> bool:
    return derived_series(alg)[-1] == 0


def derivation_basis(alg: LieAlgebra, strictly_lower: bool = False) -> list[PolyMatrix]:
    """Basis of Der(alg) (instantiated algebras only), optionally intersected
    with the strictly lower-triangular matrices."""
    table = _constant_table(alg)
    n = alg.dim
    # unknown D[r][c] at index r*n + c
    eqs = []
    for i in range(n):
        for j in range(i + 1, n):
            cij = table[i][j]
            for k in range(n):
                row = [Fraction(0)] * (n * n)
                # (D [e_i, e_j])_k = sum_m D[k][m] c_ij^m
                for m, c in enumerate(cij):
                    row[k * n + m] += c
                # [D e_i, e_j]_k = sum_m D[m][i] c_mj^k
                for m in range(n):
                    row[m * n + i] -= table[m][j][k]
                    row[m * n + j] -= table[i][m][k]
                if any(row):
                    eqs.append(row)
    if strictly_lower:
        for r in range(n):
            for c in range(r, n):
                row = [Fraction(0)] * (n * n)
                row[r * n + c] = Fraction(1)
                eqs.append(row)
    sols = qlinalg.nullspace(eqs, n * n)
    return [PolyMatrix(alg.ctx, [v[r * n:(r + 1) * n] for r in range(n)]) for v in sols]
