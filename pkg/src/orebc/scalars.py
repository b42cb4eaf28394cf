"""Exact ground fields: the rationals and prime fields GF(p).

Field elements are kept in a *raw* canonical representation so that the
polynomial code can do arithmetic without wrapping every coefficient:

* rationals: :class:`fractions.Fraction` (lowest terms, positive denominator)
* GF(p): ``int`` residue in ``[0, p)``

:class:`Scalar` is the public, self-describing element type built on top.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import DivisionByZero, FieldMismatch

RATIONALS = "rationals"
PRIME_FIELD = "prime-field"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str = RATIONALS
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise ValueError("the rationals take no modulus")
        elif self.kind == PRIME_FIELD:
            if not isinstance(self.modulus, int) or not is_prime(self.modulus):
                raise ValueError(f"modulus must be a prime, got {self.modulus!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(PRIME_FIELD, p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts ``Q``, ``QQ``, ``rationals``, ``GF(7)``, ``F7``, ``Fp7`` or ``7``."""
        t = text.strip().replace(" ", "")
        if t.lower() in ("q", "qq", "rationals"):
            return cls.rationals()
        m = re.fullmatch(r"(?:GF\(|F|Fp|GF)?(\d+)\)?", t, flags=re.IGNORECASE)
        if m is None:
            raise ValueError(f"cannot parse field {text!r}")
        return cls.prime(int(m.group(1)))

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME_FIELD

    @property
    def characteristic(self) -> int:
        return self.modulus if self.kind == PRIME_FIELD else 0

    def __str__(self):
        return "Q" if self.kind == RATIONALS else f"GF({self.modulus})"

    # -- raw arithmetic ------------------------------------------------------

    def convert(self, v) -> Union[int, Fraction]:
        """Coerce an int, Fraction, Scalar or numeric string to a raw element."""
        if isinstance(v, Scalar):
            if v.field != self:
                raise FieldMismatch(f"{v.field} element used in {self}")
            return v.value
        if isinstance(v, str):
            v = Fraction(v.strip())
        if self.kind == RATIONALS:
            return Fraction(v)
        p = self.modulus
        if isinstance(v, Fraction):
            if v.denominator % p == 0:
                raise DivisionByZero(f"denominator {v.denominator} vanishes in {self}")
            return v.numerator * pow(v.denominator, -1, p) % p
        return int(v) % p

    def reduce(self, v):
        """Canonicalize the result of ``+``, ``-`` or ``*`` on raw elements."""
        if self.modulus is None:
            return v
        return v % self.modulus

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        if self.modulus is None:
            return 1 / a
        return pow(a, -1, self.modulus)

    def div(self, a, b):
        return self.reduce(a * self.inv(b))

    def zero(self):
        return Fraction(0) if self.modulus is None else 0

    def one(self):
        return Fraction(1) if self.modulus is None else 1

    def format(self, a) -> str:
        return str(a)


QQ = FieldSpec.rationals()


def characteristic(f: FieldSpec) -> int:
    return f.characteristic


class Scalar:
    """An immutable element of a :class:`FieldSpec`."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value=0):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.convert(value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _other(self, b):
        if isinstance(b, Scalar):
            if b.field != self.field:
                raise FieldMismatch(f"{self.field} vs {b.field}")
            return b.value
        if isinstance(b, (int, Fraction)):
            return self.field.convert(b)
        return None

    def _wrap(self, v):
        return Scalar(self.field, self.field.reduce(v))

    def __add__(self, b):
        v = self._other(b)
        return NotImplemented if v is None else self._wrap(self.value + v)

    __radd__ = __add__

    def __sub__(self, b):
        v = self._other(b)
        return NotImplemented if v is None else self._wrap(self.value - v)

    def __rsub__(self, b):
        v = self._other(b)
        return NotImplemented if v is None else self._wrap(v - self.value)

    def __mul__(self, b):
        v = self._other(b)
        return NotImplemented if v is None else self._wrap(self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, b):
        v = self._other(b)
        return NotImplemented if v is None else Scalar(self.field, self.field.div(self.value, v))

    def __rtruediv__(self, b):
        v = self._other(b)
        return NotImplemented if v is None else Scalar(self.field, self.field.div(v, self.value))

    def __neg__(self):
        return self._wrap(-self.value)

    def inv(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, b):
        if isinstance(b, Scalar):
            return self.field == b.field and self.value == b.value
        if isinstance(b, (int, Fraction)):
            try:
                return self.value == self.field.convert(b)
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"Scalar({self.field}, {self.value})"

    def __str__(self):
        return str(self.value)


_OPS = {"add", "sub", "mul", "div", "neg", "inv"}


def field_arith(op: str, a: Scalar, b: Optional[Scalar] = None) -> Scalar:
    if op not in _OPS:
        raise ValueError(f"unknown field operation {op!r}")
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    if b is None:
        raise TypeError(f"{op} needs two operands")
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    return a / b
