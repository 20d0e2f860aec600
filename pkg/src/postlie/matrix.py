"""Matrices with polynomial entries and the exact tests built on them."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from . import qlinalg
from .poly import Context, MultiPoly, parse_poly

Entry = Union[int, Fraction, str, MultiPoly]


class MatrixError(Exception):
    pass


class DimensionError(MatrixError):
    pass


class UnsupportedInputError(MatrixError):
    pass


def _entry(ctx: Context, v: Entry) -> MultiPoly:
    if isinstance(v, MultiPoly):
        if v.ctx != ctx:
            return v.lift(ctx)
        return v
    if isinstance(v, str):
        return parse_poly(v, ctx)
    return MultiPoly.constant(ctx, v)


class PolyMatrix:
    """Immutable dense matrix of :class:`MultiPoly` entries sharing one context."""

    __slots__ = ("ctx", "rows", "cols", "_e")

    def __init__(self, ctx: Context, rows: Sequence[Sequence[Entry]]):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionError("matrices must have at least one row and column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("ragged rows")
        self.ctx = ctx
        self.rows = len(rows)
        self.cols = len(rows[0])
        self._e = tuple(tuple(_entry(ctx, v) for v in r) for r in rows)

    @classmethod
    def _wrap(cls, ctx, entries):
        m = cls.__new__(cls)
        m.ctx = ctx
        m.rows = len(entries)
        m.cols = len(entries[0])
        m._e = tuple(tuple(r) for r in entries)
        return m

    @classmethod
    def identity(cls, ctx: Context, n: int) -> "PolyMatrix":
        return cls(ctx, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ctx: Context, rows: int, cols: int | None = None) -> "PolyMatrix":
        return cls(ctx, [[0] * (rows if cols is None else cols) for _ in range(rows)])

    @classmethod
    def from_columns(cls, ctx: Context, columns: Sequence[Sequence[Entry]]) -> "PolyMatrix":
        return cls(ctx, list(map(list, zip(*columns))))

    # -- access ---------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple[MultiPoly, ...]:
        return self._e[i]

    def column(self, j: int) -> tuple[MultiPoly, ...]:
        return tuple(r[j] for r in self._e)

    def tolist(self) -> list[list[MultiPoly]]:
        return [list(r) for r in self._e]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(not v for r in self._e for v in r)

    def is_constant(self) -> bool:
        return all(v.is_constant() for r in self._e for v in r)

    def free_symbols(self) -> set[str]:
        out: set = set()
        for r in self._e:
            for v in r:
                out |= v.free_symbols()
        return out

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.ctx == other.ctx and self._e == other._e

    def __hash__(self):
        return hash((self.ctx, self._e))

    def __repr__(self):
        return f"PolyMatrix({self.to_strings()!r})"

    def to_strings(self) -> list[list[str]]:
        return [[v.format() for v in r] for r in self._e]

    def format(self) -> str:
        cells = self.to_strings()
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    # -- arithmetic -----------------------------------------------------------

    def _check_same(self, other: "PolyMatrix"):
        if not isinstance(other, PolyMatrix):
            raise TypeError(f"expected PolyMatrix, got {type(other).__name__}")
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def map(self, fn: Callable[[MultiPoly], MultiPoly]) -> "PolyMatrix":
        return PolyMatrix._wrap(self.ctx, [[fn(v) for v in r] for r in self._e])

    def __add__(self, other):
        self._check_same(other)
        return PolyMatrix._wrap(self.ctx, [[a + b for a, b in zip(ra, rb)]
                                           for ra, rb in zip(self._e, other._e)])

    def __sub__(self, other):
        self._check_same(other)
        return PolyMatrix._wrap(self.ctx, [[a - b for a, b in zip(ra, rb)]
                                           for ra, rb in zip(self._e, other._e)])

    def __neg__(self):
        return self.map(lambda v: -v)

    def scale(self, c: Union[int, Fraction, MultiPoly]) -> "PolyMatrix":
        return self.map(lambda v: v * c)

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            return self.matmul(other)
        return self.scale(other)

    __rmul__ = scale

    def __matmul__(self, other):
        return self.matmul(other)

    def matmul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        if self.ctx != other.ctx:
            from .poly import ContextError
            raise ContextError("matrices live in different contexts")
        zero = self.ctx.zero()
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for r in self._e:
            row = []
            for col in cols:
                acc = zero
                for a, b in zip(r, col):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix._wrap(self.ctx, out)

    def apply(self, vec: Sequence[MultiPoly]) -> tuple[MultiPoly, ...]:
        if len(vec) != self.cols:
            raise DimensionError(f"vector of length {len(vec)} for {self.shape} matrix")
        zero = self.ctx.zero()
        out = []
        for r in self._e:
            acc = zero
            for a, b in zip(r, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __pow__(self, k: int) -> "PolyMatrix":
        self._require_square()
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = PolyMatrix.identity(self.ctx, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix._wrap(self.ctx, [list(c) for c in zip(*self._e)])

    def trace(self) -> MultiPoly:
        self._require_square()
        acc = self.ctx.zero()
        for i in range(self.rows):
            acc = acc + self._e[i][i]
        return acc

    def subs(self, assignment: Mapping) -> "PolyMatrix":
        return self.map(lambda v: v.subs(assignment))

    def lift(self, ctx: Context) -> "PolyMatrix":
        return PolyMatrix._wrap(ctx, [[v.lift(ctx) for v in r] for r in self._e])

    def evaluate(self, assignment: Mapping) -> qlinalg.QMatrix:
        return [[v.eval(assignment) for v in r] for r in self._e]

    def to_rational(self) -> qlinalg.QMatrix:
        if not self.is_constant():
            raise UnsupportedInputError("matrix has non-constant entries")
        return [[v.constant_value() for v in r] for r in self._e]

    @classmethod
    def from_rational(cls, ctx: Context, rows: qlinalg.QMatrix) -> "PolyMatrix":
        return cls(ctx, rows)

    def block(self, translation: Sequence[MultiPoly]) -> "PolyMatrix":
        """The (n+1)x(n+1) matrix [[self, translation], [0, 0]]."""
        self._require_square()
        n = self.rows
        zero = self.ctx.zero()
        rows = [list(self._e[i]) + [translation[i]] for i in range(n)]
        rows.append([zero] * (n + 1))
        return PolyMatrix._wrap(self.ctx, rows)

    def minor(self, i: int, j: int) -> "PolyMatrix":
        return PolyMatrix._wrap(self.ctx, [r[:j] + r[j + 1:] for k, r in enumerate(self._e) if k != i])

    def _require_square(self):
        if not self.is_square():
            raise DimensionError(f"square matrix required, got {self.shape}")

    # -- determinant / inverse ------------------------------------------------

    def det(self) -> MultiPoly:
        return determinant(self)

    def inverse(self) -> "PolyMatrix":
        """Inverse over the polynomial ring; the determinant must be a nonzero constant."""
        d = determinant(self)
        if not d.is_constant() or not d:
            raise ZeroDivisionError(f"matrix is not invertible over the polynomial ring (det = {d})")
        n = self.rows
        dinv = 1 / d.constant_value()
        if n == 1:
            return PolyMatrix._wrap(self.ctx, [[self.ctx.const(dinv)]])
        adj = [[determinant(self.minor(j, i)) * ((-1) ** (i + j)) * dinv for j in range(n)]
               for i in range(n)]
        return PolyMatrix._wrap(self.ctx, adj)


def determinant(m: PolyMatrix) -> MultiPoly:
    """Exact determinant: cofactor expansion up to 5x5, Bareiss elimination above."""
    m._require_square()
    if m.rows <= 5:
        return _cofactor_det(m.tolist())
    return _bareiss_det(m)


def _cofactor_det(a: list[list[MultiPoly]]) -> MultiPoly:
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    # expand along the sparsest row
    i = min(range(n), key=lambda r: sum(1 for v in a[r] if v))
    total = a[0][0].ctx.zero()
    for j, v in enumerate(a[i]):
        if not v:
            continue
        sub = [row[:j] + row[j + 1:] for k, row in enumerate(a) if k != i]
        term = v * _cofactor_det(sub)
        total = total - term if (i + j) % 2 else total + term
    return total


def _bareiss_det(m: PolyMatrix) -> MultiPoly:
    a = m.tolist()
    n = len(a)
    ctx = m.ctx
    sign = 1
    prev = ctx.one()
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return ctx.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial det(T*I - M); ``coefficients[k]`` multiplies T^k."""

    coefficients: tuple[MultiPoly, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def ctx(self) -> Context:
        return self.coefficients[0].ctx

    def is_pure_power(self) -> bool:
        """True iff the polynomial is T^n, i.e. every lower coefficient vanishes."""
        return all(not c for c in self.coefficients[:-1])

    def evaluate_at(self, m: PolyMatrix) -> PolyMatrix:
        """Substitute a square matrix for the indeterminate (Horner)."""
        n = m.rows
        out = PolyMatrix.zeros(m.ctx, n)
        ident = PolyMatrix.identity(m.ctx, n)
        for c in reversed(self.coefficients):
            out = out @ m + ident.scale(c)
        return out

    def format(self, var: str = "lambda") -> str:
        """Format with ``var`` as the indeterminate (falls back to ``T`` on a name clash)."""
        names = self.ctx.names
        if var in names:
            var = "T"
        ext = Context((var,) + names)
        t = ext.symbol(var)
        total = ext.zero()
        for k, c in enumerate(self.coefficients):
            total = total + c.lift(ext) * t**k
        return total.format()

    __str__ = format


def char_poly(m: PolyMatrix) -> CharPoly:
    """Faddeev-LeVerrier recurrence; exact since the coefficients contain Q."""
    m._require_square()
    n = m.rows
    ident = PolyMatrix.identity(m.ctx, n)
    coeffs = [m.ctx.zero()] * (n + 1)
    coeffs[n] = m.ctx.one()
    mk = PolyMatrix.zeros(m.ctx, n)
    for k in range(1, n + 1):
        mk = m @ mk + ident.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(m @ mk).trace() / k
    return CharPoly(tuple(coeffs))


def nilpotency_index(m: PolyMatrix) -> int | None:
    """Smallest k with M^k = 0 identically, or None if M is not nilpotent."""
    m._require_square()
    if m.is_zero():
        return 1
    p = m
    for k in range(2, m.rows + 1):
        p = p @ m
        if p.is_zero():
            return k
    return None


def is_nilpotent(m: PolyMatrix) -> bool:
    """M^n = 0 as a polynomial identity (so M is nilpotent at every real point)."""
    return nilpotency_index(m) is not None


# -- constant matrices: minimal polynomial and Jordan-Chevalley ----------------

def minimal_polynomial(a: qlinalg.QMatrix) -> qlinalg.UPoly:
    """Monic minimal polynomial of a rational matrix, via the first linear
    dependency among I, A, A^2, ..."""
    n = len(a)
    powers = [qlinalg.identity(n)]
    while True:
        vecs = [[v for row in p for v in row] for p in powers]
        k = len(powers) - 1
        # solve sum c_i A^i = 0 with c_k = 1
        cols = list(zip(*vecs))  # n*n equations, k+1 unknowns
        null = qlinalg.nullspace([list(c) for c in cols], k + 1)
        if null:
            c = null[0]
            return qlinalg.umonic(c)
        powers.append(qlinalg.matmul(powers[-1], a))


@dataclass(frozen=True)
class JordanPair:
    semisimple: PolyMatrix
    nilpotent: PolyMatrix


class ElementType(str, enum.Enum):
    NILPOTENT = "nilpotent"
    SEMISIMPLE = "semisimple"
    MIXED = "mixed"


def jordan_chevalley(m: PolyMatrix) -> JordanPair:
    """Additive decomposition M = S + N of a constant rational matrix.

    S is obtained by Newton iteration S <- S - q(S) q'(S)^{-1}, where q is the
    squarefree part of the characteristic polynomial; S is a polynomial in M,
    so S and N commute.
    """
    m._require_square()
    if not m.is_constant():
        raise UnsupportedInputError("Jordan-Chevalley decomposition needs constant entries")
    a = m.to_rational()
    cp = char_poly(m)
    p = [c.constant_value() for c in cp.coefficients]
    q = qlinalg.squarefree_part(p)
    dq = qlinalg.uderiv(q)
    s = [list(r) for r in a]
    for _ in range(2 * len(a) + 2):
        qs = qlinalg.ueval_matrix(q, s)
        if qlinalg.is_zero(qs):
            break
        step = qlinalg.matmul(qs, qlinalg.inverse(qlinalg.ueval_matrix(dq, s)))
        s = qlinalg.matadd(s, step, Fraction(-1))
    else:  # pragma: no cover - Newton converges in ceil(log2 n) steps
        raise MatrixError("Newton iteration did not converge")
    n_part = qlinalg.matadd(a, s, Fraction(-1))
    return JordanPair(PolyMatrix(m.ctx, s), PolyMatrix(m.ctx, n_part))


def element_type(m: PolyMatrix) -> ElementType:
    pair = jordan_chevalley(m)
    if pair.semisimple.is_zero():
        return ElementType.NILPOTENT
    if pair.nilpotent.is_zero():
        return ElementType.SEMISIMPLE
    return ElementType.MIXED


def is_semisimple(m: PolyMatrix) -> bool:
    """Diagonalizable over C, certified by a squarefree minimal polynomial."""
    return qlinalg.is_squarefree(minimal_polynomial(m.to_rational()))
