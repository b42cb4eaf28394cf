"""Dense univariate polynomials k[y] and rational functions k(y)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BothZero, DivisionByZero, FieldMismatch, NotInvertible, ZeroPolynomial
from .scalars import FieldSpec, Scalar

#: Degree of the zero polynomial.  Ordered below every integer and absorbing
#: under addition, which keeps ``deg(fg) = deg f + deg g`` total.
NEG_INF = float("-inf")


def _strip(c: list) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _fmt_term(coeff: str, power: int, var: str) -> str:
    if power == 0:
        return coeff
    mono = var if power == 1 else f"{var}^{power}"
    if coeff == "1":
        return mono
    if coeff == "-1":
        return "-" + mono
    return f"{coeff}*{mono}"


class Poly:
    """Polynomial in ``y`` with coefficients stored ascending, raw field values."""

    __slots__ = ("field", "_c", "_hash")

    def __init__(self, field: FieldSpec, coeffs: Iterable = ()):
        self.field = field
        self._c = _strip([field.convert(a) for a in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, field: FieldSpec, coeffs) -> "Poly":
        # coeffs already canonical raw values; only trailing zeros stripped
        p = cls.__new__(cls)
        p.field = field
        p._c = _strip(list(coeffs))
        p._hash = None
        return p

    @classmethod
    def zero(cls, field):
        return cls._raw(field, ())

    @classmethod
    def one(cls, field):
        return cls._raw(field, (field.one(),))

    @classmethod
    def const(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def gen(cls, field):
        return cls._raw(field, (field.zero(), field.one()))

    @classmethod
    def monomial(cls, field, power: int, c=1):
        return cls(field, [0] * power + [c])

    # -- inspection ----------------------------------------------------------

    @property
    def raw(self) -> tuple:
        return self._c

    @property
    def coeffs(self) -> tuple:
        return tuple(Scalar(self.field, a) for a in self._c)

    def __getitem__(self, i: int):
        """Raw coefficient of ``y^i`` (zero beyond the degree)."""
        if 0 <= i < len(self._c):
            return self._c[i]
        return self.field.zero()

    def __len__(self):
        return len(self._c)

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def lc(self):
        """Raw leading coefficient."""
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._c[-1]

    def leading_coeff(self) -> Scalar:
        return Scalar(self.field, self.lc)

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self._c == other._c
        if isinstance(other, (int, Fraction, Scalar)):
            try:
                return self._c == Poly.const(self.field, other)._c
            except (DivisionByZero, FieldMismatch):
                return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self._c))
        return self._hash

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return Poly.const(self.field, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        red = self.field.reduce
        out = list(a)
        for i, v in enumerate(b):
            out[i] = red(out[i] + v)
        return Poly._raw(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        red = self.field.reduce
        return Poly._raw(self.field, [red(-v) for v in self._c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if not a or not b:
            return Poly.zero(self.field)
        if len(b) == 1:
            red, c = self.field.reduce, b[0]
            return Poly._raw(self.field, [red(v * c) for v in a])
        out = [self.field.zero()] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if not u:
                continue
            for j, v in enumerate(b):
                if v:
                    out[i + j] += u * v
        if self.field.modulus is None:
            return Poly._raw(self.field, out)
        m = self.field.modulus
        return Poly._raw(self.field, [v % m for v in out])

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Poly.one(self.field), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        return self * Poly.const(self.field, c)

    def shift(self, k: int) -> "Poly":
        """Multiply by ``y^k``."""
        if not self._c:
            return self
        return Poly._raw(self.field, [self.field.zero()] * k + list(self._c))

    def monic(self) -> "Poly":
        if not self._c:
            return self
        inv = self.field.inv(self.lc)
        red = self.field.reduce
        return Poly._raw(self.field, [red(v * inv) for v in self._c])

    def divmod(self, g: "Poly"):
        """Euclidean division ``self = q*g + r`` with ``deg r < deg g``."""
        g = self._coerce(g)
        if not g:
            raise DivisionByZero("polynomial division by zero")
        F, red = self.field, self.field.reduce
        r = list(self._c)
        dg = len(g._c) - 1
        inv = F.inv(g.lc)
        if len(r) - 1 < dg:
            return Poly.zero(F), self
        q = [F.zero()] * (len(r) - dg)
        gc = g._c
        for k in range(len(r) - 1 - dg, -1, -1):
            c = r[k + dg]
            if not c:
                continue
            c = red(c * inv)
            q[k] = c
            for j, v in enumerate(gc):
                if v:
                    r[k + j] = red(r[k + j] - c * v)
        return Poly._raw(F, q), Poly._raw(F, r[:dg])

    __divmod__ = divmod

    def __floordiv__(self, g):
        return self.divmod(g)[0]

    def __mod__(self, g):
        return self.divmod(g)[1]

    def exact_div(self, g: "Poly") -> "Poly":
        q, r = self.divmod(g)
        if r:
            raise NotInvertible(f"{g} does not divide {self}")
        return q

    def compose(self, p: "Poly") -> "Poly":
        """``self(p(y))`` by Horner's rule."""
        p = self._coerce(p)
        result = Poly.zero(self.field)
        for c in reversed(self._c):
            result = result * p + Poly._raw(self.field, (c,))
        return result

    def __call__(self, p):
        if isinstance(p, Poly):
            return self.compose(p)
        x = self.field.convert(p)
        acc = self.field.zero()
        for c in reversed(self._c):
            acc = self.field.reduce(acc * x + c)
        return Scalar(self.field, acc)

    # -- text ----------------------------------------------------------------

    def to_str(self, var: str = "y") -> str:
        if not self._c:
            return "0"
        out = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if not c:
                continue
            s = _fmt_term(str(c), i, var)
            if not out:
                out.append(s)
            elif s.startswith("-"):
                out.append("- " + s[1:])
            else:
                out.append("+ " + s)
        return " ".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.field}, {self})"


def degree(f: Poly):
    return f.degree


def leading_coeff(f: Poly) -> Scalar:
    return f.leading_coeff()


def poly_arith(op: str, f: Poly, g: Poly) -> Poly:
    if f.field != g.field:
        raise FieldMismatch(f"{f.field} vs {g.field}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_divrem(f: Poly, g: Poly):
    return f.divmod(g)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; ``gcd(0, f) = monic(f)``."""
    if f.field != g.field:
        raise FieldMismatch(f"{f.field} vs {g.field}")
    if not f and not g:
        raise BothZero("gcd(0, 0) is undefined")
    while g:
        f, g = g, f.divmod(g)[1]
    return f.monic()


def poly_compose(f: Poly, p: Poly) -> Poly:
    if f.field != p.field:
        raise FieldMismatch(f"{f.field} vs {p.field}")
    return f.compose(p)


def check_functional_eq(f: Poly, g: Poly, p: Poly) -> bool:
    """Whether ``f(y) g(p(y)) == f(p(y)) g(y)`` holds identically."""
    return f * g.compose(p) == f.compose(p) * g


class RatFunc:
    """Element of k(y): coprime numerator and monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            raise TypeError("numerator must be a Poly")
        field = num.field
        if den is None:
            den = Poly.one(field)
        elif not isinstance(den, Poly):
            den = Poly.const(field, den)
        if den.field != field:
            raise FieldMismatch(f"{field} vs {den.field}")
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            num, den = num, Poly.one(field)
        elif not den.is_constant():
            h = poly_gcd(num, den)
            if not h.is_constant():
                num, den = num.exact_div(h), den.exact_div(h)
        c = den.lc
        if c != 1:
            inv = field.inv(c)
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den
        self._hash = None

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFunc":
        r = cls.__new__(cls)
        r.num, r.den, r._hash = num, den, None
        return r

    @property
    def field(self) -> FieldSpec:
        return self.num.field

    def is_poly(self) -> bool:
        return self.den.is_constant()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Fraction, Scalar)):
            return self.is_poly() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return RatFunc._raw(other, Poly.one(other.field))
        if isinstance(other, (int, Fraction, Scalar)):
            return RatFunc._raw(Poly.const(self.field, other), Poly.one(self.field))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_poly() and o.is_poly():
            return RatFunc._raw(self.num * o.num, self.den)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise DivisionByZero("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num ** e, self.den ** e)

    def compose(self, p: Poly) -> "RatFunc":
        return RatFunc(self.num.compose(p), self.den.compose(p))

    def to_str(self, var: str = "y") -> str:
        if self.den == 1:
            return self.num.to_str(var)
        return f"({self.num.to_str(var)})/({self.den.to_str(var)})"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RatFunc({self})"


def ratfunc_arith(op: str, u: RatFunc, v: RatFunc) -> RatFunc:
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    if op == "div":
        return u / v
    raise ValueError(f"unknown rational-function operation {op!r}")


def poly_from_raw(field: FieldSpec, coeffs: Sequence) -> Poly:
    return Poly._raw(field, coeffs)
