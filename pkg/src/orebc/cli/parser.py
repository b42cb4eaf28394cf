"""Expression grammar shared by Ore elements and bivariate polynomials.

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' nat)?
    atom   := 'x' | 'y' | 's' | 't' | integer | '(' expr ')'

``*`` is never reordered; ``/`` divides on the right by a nonzero element of
the coefficient ring (so ``3/2`` and ``(y+1)/(y^2)`` both work over k(y)).
Juxtaposition such as ``2y`` is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Union

from ..annihilator import BivarPoly
from ..errors import ExponentError, NotInvertible, ParseError
from ..ore import OreAlgebra, OreElem
from ..poly import Poly, RatFunc
from ..scalars import FieldSpec

ORE_VARS = frozenset({"x", "y"})
BIVAR_VARS = frozenset({"s", "t", "y"})


@dataclass(frozen=True)
class Num:
    value: int
    pos: int = 0


@dataclass(frozen=True)
class Var:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    pos: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    pos: int = 0


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    pos: int = 0


Expr = Union[Num, Var, Neg, BinOp, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            break
        if m.group(1):
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, variables: FrozenSet[str]):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value or kind not in ("op",):
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def parse(self) -> Expr:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        e = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", pos)
        return e

    def expr(self) -> Expr:
        kind, v, pos = self.peek()
        if kind == "op" and v == "-":
            self.take()
            e = Neg(self.term(), pos)
        else:
            e = self.term()
        while True:
            kind, v, pos = self.peek()
            if kind == "op" and v in "+-":
                self.take()
                e = BinOp(v, e, self.term(), pos)
            else:
                return e

    def term(self) -> Expr:
        e = self.factor()
        while True:
            kind, v, pos = self.peek()
            if kind == "op" and v in "*/":
                self.take()
                e = BinOp(v, e, self.factor(), pos)
            elif kind in ("num", "name") or (kind == "op" and v == "("):
                raise ParseError("implicit multiplication is not allowed; use '*'", pos)
            else:
                return e

    def factor(self) -> Expr:
        base = self.atom()
        kind, v, pos = self.peek()
        if kind == "op" and v == "^":
            self.take()
            return Pow(base, self.exponent(), pos)
        return base

    def exponent(self) -> int:
        kind, v, pos = self.take()
        if kind == "num":
            return int(v)
        if kind == "op" and v == "(":
            neg = False
            kind, v, p2 = self.take()
            if kind == "op" and v == "-":
                neg = True
                kind, v, p2 = self.take()
            if kind != "num":
                raise ExponentError("exponent must be a natural number literal", p2)
            self.expect(")")
            if neg and int(v) != 0:
                raise ExponentError("negative exponents are not allowed", pos)
            return int(v)
        if kind == "op" and v == "-":
            raise ExponentError("negative exponents are not allowed", pos)
        raise ExponentError("exponent must be a natural number literal", pos)

    def atom(self) -> Expr:
        kind, v, pos = self.take()
        if kind == "num":
            return Num(int(v), pos)
        if kind == "name":
            if v not in self.variables:
                allowed = ", ".join(sorted(self.variables))
                raise ParseError(f"unknown symbol {v!r} (allowed: {allowed})", pos)
            return Var(v, pos)
        if kind == "op" and v == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"expected an operand, found {v or 'end of input'!r}", pos)


def parse_expr(src: str, variables: FrozenSet[str] = ORE_VARS) -> Expr:
    return _Parser(src, frozenset(variables)).parse()


def eval_expr(e: Expr, A: OreAlgebra) -> OreElem:
    """Evaluate an AST in ``A``; products keep their written order."""
    if isinstance(e, Num):
        return A(e.value)
    if isinstance(e, Var):
        if e.name == "x":
            return A.x
        if e.name == "y":
            return A.y
        raise ParseError(f"symbol {e.name!r} has no meaning in an Ore algebra", e.pos)
    if isinstance(e, Neg):
        return -eval_expr(e.operand, A)
    if isinstance(e, Pow):
        return eval_expr(e.base, A) ** e.exponent
    left, right = eval_expr(e.left, A), eval_expr(e.right, A)
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    if e.op == "*":
        return left * right
    return left * _coefficient_inverse(right, A, e.pos)


def _coefficient_inverse(r: OreElem, A: OreAlgebra, pos: int) -> OreElem:
    if r.degree != 0:
        raise NotInvertible(f"only nonzero coefficients can divide (position {pos})")
    c = r.leading
    if isinstance(c, RatFunc):
        return A(c.inverse())
    if not c.is_constant():
        raise NotInvertible(f"{c} is not invertible in k[y] (position {pos})")
    return A(A.field.inv(c.lc))


def parse_ore(src: str, A: OreAlgebra) -> OreElem:
    return eval_expr(parse_expr(src, ORE_VARS), A)


# -- bivariate polynomials f(s, t) over k[y] ---------------------------------

def _eval_bivar(e: Expr, F: FieldSpec) -> dict:
    """Commutative evaluation to ``{(a, b, c): raw}`` for ``s^a t^b y^c``."""
    if isinstance(e, Num):
        v = F.convert(e.value)
        return {(0, 0, 0): v} if v else {}
    if isinstance(e, Var):
        key = {"s": (1, 0, 0), "t": (0, 1, 0), "y": (0, 0, 1)}.get(e.name)
        if key is None:
            raise ParseError(f"symbol {e.name!r} is not allowed in f(s, t)", e.pos)
        return {key: F.one()}
    if isinstance(e, Neg):
        return {k: F.reduce(-v) for k, v in _eval_bivar(e.operand, F).items()}
    if isinstance(e, Pow):
        base = _eval_bivar(e.base, F)
        out = {(0, 0, 0): F.one()}
        for _ in range(e.exponent):
            out = _bmul(out, base, F)
        return out
    left, right = _eval_bivar(e.left, F), _eval_bivar(e.right, F)
    if e.op in "+-":
        out = dict(left)
        for k, v in right.items():
            out[k] = F.reduce(out.get(k, F.zero()) + (v if e.op == "+" else -v))
        return {k: v for k, v in out.items() if v}
    if e.op == "*":
        return _bmul(left, right, F)
    if set(right) - {(0, 0, 0)} or not right:
        raise NotInvertible(f"f(s, t) can only be divided by nonzero scalars (position {e.pos})")
    inv = F.inv(right[(0, 0, 0)])
    return {k: F.reduce(v * inv) for k, v in left.items()}


def _bmul(u: dict, v: dict, F: FieldSpec) -> dict:
    out = {}
    for (a1, b1, c1), x1 in u.items():
        for (a2, b2, c2), x2 in v.items():
            k = (a1 + a2, b1 + b2, c1 + c2)
            out[k] = F.reduce(out.get(k, F.zero()) + x1 * x2)
    return {k: w for k, w in out.items() if w}


def parse_bivar(src: str, F: FieldSpec) -> BivarPoly:
    raw = _eval_bivar(parse_expr(src, BIVAR_VARS), F)
    grouped: dict = {}
    for (a, b, c), v in raw.items():
        row = grouped.setdefault((a, b), {})
        row[c] = v
    terms = {}
    for ab, row in grouped.items():
        coeffs = [F.zero()] * (max(row) + 1)
        for c, v in row.items():
            coeffs[c] = v
        terms[ab] = Poly._raw(F, coeffs)
    return BivarPoly(F, terms)


def parse_scalar(src: str, F: FieldSpec):
    """Scalar literal: integer or ``a/b`` (optionally signed); returns a raw value."""
    try:
        return F.convert(Fraction(src.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad scalar {src!r}: {exc}") from None
