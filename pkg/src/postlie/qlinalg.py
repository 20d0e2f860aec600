"""Dense linear algebra and univariate polynomials over Q.

Matrices here are plain lists of rows of :class:`Fraction`; univariate
polynomials are coefficient lists, lowest degree first, with no trailing
zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

QMatrix = list[list[Fraction]]
UPoly = list[Fraction]


# -- matrices -----------------------------------------------------------------

def qmat(rows) -> QMatrix:
    return [[Fraction(v) for v in row] for row in rows]


def identity(n: int) -> QMatrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> QMatrix:
    return [[Fraction(0)] * c for _ in range(r)]


def matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matadd(a: QMatrix, b: QMatrix, scale: Fraction = Fraction(1)) -> QMatrix:
    return [[x + scale * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def is_zero(a: QMatrix) -> bool:
    return all(not v for row in a for v in row)


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[QMatrix, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> QMatrix:
    """Basis of {v : rows @ v = 0}."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def inverse(a: QMatrix) -> QMatrix:
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


# -- univariate polynomials ---------------------------------------------------

def utrim(p: Sequence[Fraction]) -> UPoly:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def uadd(p: UPoly, q: UPoly) -> UPoly:
    n = max(len(p), len(q))
    return utrim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def umul(p: UPoly, q: UPoly) -> UPoly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return utrim(out)


def udivmod(p: UPoly, q: UPoly) -> tuple[UPoly, UPoly]:
    q = utrim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(utrim(p))
    quo = [Fraction(0)] * max(len(r) - len(q) + 1, 0)
    while len(r) >= len(q):
        shift = len(r) - len(q)
        f = r[-1] / q[-1]
        quo[shift] = f
        for i, c in enumerate(q):
            r[i + shift] -= f * c
        r = utrim(r)
    return utrim(quo), r


def umonic(p: UPoly) -> UPoly:
    p = utrim(p)
    if not p:
        return p
    return [c / p[-1] for c in p]


def ugcd(p: UPoly, q: UPoly) -> UPoly:
    p, q = utrim(p), utrim(q)
    while q:
        p, q = q, udivmod(p, q)[1]
    return umonic(p)


def uderiv(p: UPoly) -> UPoly:
    return utrim([i * c for i, c in enumerate(p)][1:])


def squarefree_part(p: UPoly) -> UPoly:
    """p / gcd(p, p'), made monic."""
    g = ugcd(p, uderiv(p))
    return umonic(udivmod(p, g)[0])


def is_squarefree(p: UPoly) -> bool:
    return len(ugcd(p, uderiv(p))) <= 1


def ueval_matrix(p: UPoly, a: QMatrix) -> QMatrix:
    """Horner evaluation of p at a square matrix."""
    n = len(a)
    out = zeros(n, n)
    for c in reversed(p):
        out = matmul(out, a)
        for i in range(n):
            out[i][i] += c
    return out


def rational_roots(p: UPoly) -> list[Fraction]:
    """All rational roots of p (p nonzero), by the rational root theorem."""
    p = utrim(p)
    if not p:
        raise ValueError("the zero polynomial has every number as a root")
    roots = []
    k = 0
    while p[k] == 0:
        k += 1
    if k:
        roots.append(Fraction(0))
    p = p[k:]
    lcm = 1
    for c in p:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in p]
    a0, an = abs(ints[0]), abs(ints[-1])
    cands = set()
    for num in _divisors(a0):
        for den in _divisors(an):
            cands.add(Fraction(num, den))
            cands.add(Fraction(-num, den))
    for c in sorted(cands):
        if _ueval(p, c) == 0:
            roots.append(c)
    return sorted(roots)


def _ueval(p: UPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out
