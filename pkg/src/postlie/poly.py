"""Exact sparse multivariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction`, which already keeps values in
lowest terms with a positive denominator.  A polynomial lives in an explicit
:class:`Context` (an ordered tuple of symbol names); exponent vectors are
tuples aligned with that order.  Mixing polynomials from different contexts
raises :class:`ContextError` instead of silently merging symbol sets.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Rational = Fraction
Scalar = Union[int, Fraction]

_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


class PolyError(Exception):
    """Base class for polynomial errors."""


class ContextError(PolyError):
    pass


class UnboundSymbolError(PolyError):
    pass


class ParseError(PolyError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class Context:
    """An ordered, duplicate-free list of symbol names.

    Two contexts are the same context iff they list the same names in the
    same order.
    """

    __slots__ = ("names", "_index", "_hash")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for n in names:
            if not _NAME_RE.match(n):
                raise ValueError(f"invalid symbol name {n!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate symbol names in {names}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}
        self._hash = hash(names)

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, Context) and self.names == other.names

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Context({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnboundSymbolError(f"symbol {name!r} not declared in {self!r}") from None

    def symbol(self, name: str) -> "MultiPoly":
        exps = [0] * len(self.names)
        exps[self.index(name)] = 1
        return MultiPoly(self, {tuple(exps): Fraction(1)})

    def symbols(self, *names: str) -> list["MultiPoly"]:
        return [self.symbol(n) for n in names]

    def const(self, value: Scalar) -> "MultiPoly":
        return MultiPoly.constant(self, value)

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return MultiPoly.constant(self, 1)

    def parse(self, text: str) -> "MultiPoly":
        return parse_poly(text, self)


@lru_cache(maxsize=None)
def standard_context(dim: int, params: tuple[str, ...] = ()) -> Context:
    """Context with coordinates x1..xn, y1..yn, z1..zn followed by ``params``."""
    names = [f"{v}{i}" for v in "xyz" for i in range(1, dim + 1)]
    return Context(names + list(params))


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class MultiPoly:
    """Immutable sparse polynomial: a map exponent-tuple -> nonzero Fraction."""

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: Context, terms: Mapping[tuple, Scalar]):
        self.ctx = ctx
        clean = {}
        n = len(ctx)
        for exps, c in terms.items():
            if len(exps) != n:
                raise ValueError("exponent vector length does not match context")
            c = _as_fraction(c)
            if c:
                clean[exps] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms):
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, ctx: Context, value: Scalar) -> "MultiPoly":
        value = _as_fraction(value)
        if not value:
            return cls._raw(ctx, {})
        return cls._raw(ctx, {(0,) * len(ctx): value})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0,) * len(self.ctx), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * len(self.ctx), Fraction(0))

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, name: str) -> int:
        i = self.ctx.index(name)
        if not self._terms:
            return -1
        return max(e[i] for e in self._terms)

    def free_symbols(self) -> set[str]:
        used = set()
        for e in self._terms:
            used.update(self.ctx.names[i] for i, k in enumerate(e) if k)
        return used

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.ctx != self.ctx:
                raise ContextError(f"cannot combine polynomials from {self.ctx!r} and {other.ctx!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.ctx, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if not other:
                return MultiPoly._raw(self.ctx, {})
            return MultiPoly._raw(self.ctx, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly._raw(self.ctx, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # only division by a nonzero rational scalar is supported
        if isinstance(other, MultiPoly):
            other = other.constant_value()
        other = _as_fraction(other)
        return self * (1 / other)

    def divide_exact(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; raises ValueError if a remainder is left."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        key = lambda e: (sum(e), e)
        lead_e = max(other._terms, key=key)
        lead_c = other._terms[lead_e]
        rem = self
        quo: dict = {}
        while rem:
            e = max(rem._terms, key=key)
            shift = tuple(a - b for a, b in zip(e, lead_e))
            if min(shift) < 0:
                raise ValueError(f"{other} does not divide {self}")
            c = rem._terms[e] / lead_c
            quo[shift] = c
            rem = rem - MultiPoly._raw(self.ctx, {shift: c}) * other
        return MultiPoly._raw(self.ctx, quo)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(self.ctx, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiPoly.constant(self.ctx, other)._terms
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation and substitution ---------------------------------------

    def eval(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a point; every occurring symbol must be assigned."""
        missing = self.free_symbols() - set(assignment)
        if missing:
            raise UnboundSymbolError(f"no value for symbol(s) {sorted(missing)}")
        vals = [_as_fraction(assignment.get(n, 0)) for n in self.ctx.names]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v**k
            total += term
        return total

    def subs(self, assignment: Mapping[str, Union[Scalar, "MultiPoly"]]) -> "MultiPoly":
        """Substitute rationals or same-context polynomials for some symbols."""
        if not assignment:
            return self
        idx = {self.ctx.index(n): v for n, v in assignment.items()}
        result = MultiPoly._raw(self.ctx, {})
        cache: dict = {}
        for e, c in self._terms.items():
            keep = list(e)
            factor = MultiPoly.constant(self.ctx, c)
            for i, v in idx.items():
                k = e[i]
                if k:
                    keep[i] = 0
                    key = (i, k)
                    if key not in cache:
                        base = v if isinstance(v, MultiPoly) else MultiPoly.constant(self.ctx, v)
                        cache[key] = base**k
                    factor = factor * cache[key]
            mono = MultiPoly._raw(self.ctx, {tuple(keep): Fraction(1)})
            result = result + factor * mono
        return result

    def lift(self, ctx: Context) -> "MultiPoly":
        """Re-express in a context containing every symbol this polynomial uses."""
        if ctx == self.ctx:
            return self
        pos = [ctx.index(n) if n in ctx else None for n in self.ctx.names]
        out = {}
        for e, c in self._terms.items():
            new = [0] * len(ctx)
            for i, k in enumerate(e):
                if k:
                    if pos[i] is None:
                        raise ContextError(
                            f"symbol {self.ctx.names[i]!r} is not in target context {ctx!r}")
                    new[pos[i]] = k
            out[tuple(new)] = c
        return MultiPoly._raw(ctx, out)

    def coefficients_in(self, names: Iterable[str]) -> dict[tuple, "MultiPoly"]:
        """Group terms by their exponents in ``names``; values keep the rest."""
        idx = [self.ctx.index(n) for n in names]
        groups: dict = {}
        for e, c in self._terms.items():
            key = tuple(e[i] for i in idx)
            rest = list(e)
            for i in idx:
                rest[i] = 0
            groups.setdefault(key, {})[tuple(rest)] = c
        return {k: MultiPoly._raw(self.ctx, v) for k, v in groups.items()}

    def diff(self, name: str) -> "MultiPoly":
        i = self.ctx.index(name)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MultiPoly._raw(self.ctx, out)

    # -- formatting ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in graded-lex order: higher total degree first, then lex."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def format(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                self.ctx.names[i] + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = format

    def __repr__(self):
        return f"MultiPoly({self.format()!r})"


# -- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9_]*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: Context):
        self.text = text
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            expected = "end of input" if kind == "end" else repr(kind)
            raise ParseError(f"expected {expected}, found {tok[1] or 'end of input'!r}",
                             self.text, tok[2])
        self.i += 1
        return tok

    def expr(self) -> MultiPoly:
        result = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> MultiPoly:
        result = self.factor()
        while self.peek()[0] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> MultiPoly:
        kind, value, pos = self.peek()
        if kind == "-":
            self.take()
            return -self.factor()
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "int":
            self.take()
            num = int(value)
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.take("int")
                den = int(den_tok[1])
                if den == 0:
                    raise ParseError("zero denominator", self.text, den_tok[2])
                return MultiPoly.constant(self.ctx, Fraction(num, den))
            return MultiPoly.constant(self.ctx, num)
        if kind == "name":
            self.take()
            if value not in self.ctx:
                raise UnboundSymbolError(f"undeclared symbol {value!r} at position {pos}")
            sym = self.ctx.symbol(value)
            if self.peek()[0] == "^":
                self.take()
                return sym ** int(self.take("int")[1])
            return sym
        raise ParseError(f"unexpected {value or 'end of input'!r}", self.text, pos)


def parse_poly(text: str, ctx: Context) -> MultiPoly:
    """Parse ``text`` with the grammar::

        expr     := term (('+'|'-') term)*
        term     := factor ('*' factor)*
        factor   := rational | symbol ('^' uint)? | '(' expr ')' | '-' factor
        rational := int ('/' uint)?
    """
    p = _Parser(text, ctx)
    if p.peek()[0] == "end":
        raise ParseError("empty expression", text, 0)
    result = p.expr()
    p.take("end")
    return result
