"""Ore extensions S = R[x; sigma, delta] with R = k[y] or k(y).

Elements are stored in canonical left form ``sum a_i x^i`` (coefficients on
the left, ascending powers of ``x``).  Products are computed by pushing ``x``
rightwards through coefficients with the commutation rule

    x r = sigma(r) x + delta(r).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import AlgebraMismatch, NotCommuting, NotInvertible, ZeroElement
from .poly import NEG_INF, Poly, RatFunc
from .scalars import QQ, FieldSpec, Scalar

POLY_RING = "poly"
RATFUNC = "ratfunc"

Coefficient = Union[Poly, RatFunc]


def _as_poly(field: FieldSpec, p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, (list, tuple)):
        return Poly(field, p)
    return Poly.const(field, p)


class OreAlgebra:
    """The ring k[y][x; sigma, delta] (or k(y)[x; sigma, delta]).

    ``sigma`` is the k-algebra endomorphism determined by ``sigma(y) = sigma_y``
    and ``delta`` the unique sigma-derivation with ``delta(y) = delta_y`` that
    vanishes on k.
    """

    def __init__(self, field: FieldSpec, sigma_y, delta_y, coeff_ring: str = POLY_RING,
                 name: Optional[str] = None):
        if coeff_ring not in (POLY_RING, RATFUNC):
            raise ValueError(f"coeff_ring must be {POLY_RING!r} or {RATFUNC!r}")
        self.field = field
        self.coeff_ring = coeff_ring
        self.sigma_y = _as_poly(field, sigma_y)
        self.delta_y = _as_poly(field, delta_y)
        if self.sigma_y.field != field or self.delta_y.field != field:
            raise AlgebraMismatch("sigma(y) and delta(y) must live over the algebra's field")
        if self.sigma_y.degree == NEG_INF or self.sigma_y.degree < 1:
            raise ValueError("sigma(y) must have degree >= 1 (sigma injective)")
        self.name = name
        self.sigma_is_identity = self.sigma_y == Poly.gen(field)
        # sigma(y^k) as sparse (index, value) pairs and delta(y^k) as Poly
        self._sigma_pows = [[(0, field.one())]]
        self._delta_pows = [Poly.zero(field)]
        self._lock = threading.Lock()

    # -- identity ------------------------------------------------------------

    def _key(self):
        return (self.field, self.coeff_ring, self.sigma_y, self.delta_y)

    def __eq__(self, other):
        return isinstance(other, OreAlgebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def describe(self) -> dict:
        return {
            "field": str(self.field),
            "coeff_ring": self.coeff_ring,
            "sigma": str(self.sigma_y),
            "delta": str(self.delta_y),
        }

    def __repr__(self):
        label = self.name or "OreAlgebra"
        return (f"{label}({self.field}, coeff_ring={self.coeff_ring}, "
                f"sigma(y)={self.sigma_y}, delta(y)={self.delta_y})")

    # -- coefficients --------------------------------------------------------

    def coerce(self, r) -> Coefficient:
        """Bring ``r`` into the coefficient ring."""
        F = self.field
        if isinstance(r, (int, Fraction, Scalar)):
            r = Poly.const(F, r)
        if isinstance(r, Poly):
            if r.field != F:
                raise AlgebraMismatch(f"coefficient over {r.field} in algebra over {F}")
            return RatFunc._raw(r, Poly.one(F)) if self.coeff_ring == RATFUNC else r
        if isinstance(r, RatFunc):
            if r.field != F:
                raise AlgebraMismatch(f"coefficient over {r.field} in algebra over {F}")
            if self.coeff_ring == RATFUNC:
                return r
            if r.is_poly():
                return r.num.scale(F.inv(r.den.lc))
            raise NotInvertible(f"{r} is not a polynomial")
        raise TypeError(f"cannot use {type(r).__name__} as a coefficient")

    def coeff_zero(self) -> Coefficient:
        return self.coerce(0)

    def coeff_one(self) -> Coefficient:
        return self.coerce(1)

    def coeff_y(self) -> Coefficient:
        return self.coerce(Poly.gen(self.field))

    def _sigma_pow(self, k: int):
        pows = self._sigma_pows
        if k >= len(pows):
            with self._lock:
                F = self.field
                while k >= len(pows):
                    prev = Poly._raw(F, _dense(pows[-1], F))
                    nxt = prev * self.sigma_y
                    pows.append([(i, v) for i, v in enumerate(nxt.raw) if v])
        return pows[k]

    def _delta_pow(self, k: int) -> Poly:
        pows = self._delta_pows
        if k >= len(pows):
            with self._lock:
                y = Poly.gen(self.field)
                while k >= len(pows):
                    # delta(y^n) = sigma(y) delta(y^(n-1)) + delta(y) y^(n-1)
                    n = len(pows)
                    pows.append(self.sigma_y * pows[n - 1] + self.delta_y.shift(n - 1))
        return pows[k]

    def _sigma_poly(self, r: Poly) -> Poly:
        if self.sigma_is_identity or r.is_constant():
            return r
        F = self.field
        c = r.raw
        dp = self.sigma_y.degree
        out = [F.zero()] * ((len(c) - 1) * dp + 1)
        for k, a in enumerate(c):
            if not a:
                continue
            for i, v in self._sigma_pow(k):
                out[i] += a * v
        if F.modulus is not None:
            out = [v % F.modulus for v in out]
        return Poly._raw(F, out)

    def _delta_poly(self, r: Poly) -> Poly:
        F = self.field
        c = r.raw
        if len(c) <= 1 or not self.delta_y:
            return Poly.zero(F)
        acc = [F.zero()] * 1
        for k in range(1, len(c)):
            a = c[k]
            if not a:
                continue
            d = self._delta_pow(k).raw
            if len(d) > len(acc):
                acc.extend([F.zero()] * (len(d) - len(acc)))
            for i, v in enumerate(d):
                if v:
                    acc[i] += a * v
        if F.modulus is not None:
            acc = [v % F.modulus for v in acc]
        return Poly._raw(F, acc)

    def apply_sigma(self, r) -> Coefficient:
        r = self.coerce(r)
        if isinstance(r, RatFunc):
            if self.sigma_is_identity:
                return r
            return RatFunc(self._sigma_poly(r.num), self._sigma_poly(r.den))
        return self._sigma_poly(r)

    def apply_delta(self, r) -> Coefficient:
        r = self.coerce(r)
        if isinstance(r, RatFunc):
            u, v = r.num, r.den
            du = self._delta_poly(u)
            if v.is_constant():
                return RatFunc._raw(du, v)
            sv = self._sigma_poly(v)
            # delta(u/v) = (delta(u) sigma(v) - sigma(u) delta(v)) / (sigma(v) v)
            return RatFunc(du * sv - self._sigma_poly(u) * self._delta_poly(v), sv * v)
        return self._delta_poly(r)

    def is_constant_coeff(self, r) -> bool:
        r = self.coerce(r)
        return self.apply_sigma(r) == r and not self.apply_delta(r)

    # -- elements ------------------------------------------------------------

    def elem(self, coeffs: Iterable) -> "OreElem":
        return OreElem(self, [self.coerce(c) for c in coeffs])

    def __call__(self, r) -> "OreElem":
        if isinstance(r, OreElem):
            if r.algebra != self:
                raise AlgebraMismatch("element of a different algebra")
            return r
        return self.elem([r])

    @property
    def zero(self) -> "OreElem":
        return OreElem(self, ())

    @property
    def one(self) -> "OreElem":
        return self.elem([1])

    @property
    def x(self) -> "OreElem":
        return self.elem([0, 1])

    @property
    def y(self) -> "OreElem":
        return self.elem([Poly.gen(self.field)])

    def monomial(self, c: int, d: int) -> "OreElem":
        """The element ``y^c x^d``."""
        return self.elem([0] * d + [Poly.monomial(self.field, c)])

    def _x_times(self, coeffs: Sequence[Coefficient]) -> list:
        """Left-multiply ``sum coeffs[j] x^j`` by ``x``."""
        zero = self.coeff_zero()
        out = [zero] * (len(coeffs) + 1)
        ident = self.sigma_is_identity
        for j, t in enumerate(coeffs):
            if not t:
                continue
            out[j + 1] = out[j + 1] + (t if ident else self.apply_sigma(t))
            d = self.apply_delta(t)
            if d:
                out[j] = out[j] + d
        return out


def _dense(sparse, F):
    n = sparse[-1][0] + 1 if sparse else 0
    out = [F.zero()] * n
    for i, v in sparse:
        out[i] = v
    return out


def _strip(c: list) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


class OreElem:
    """Immutable element ``sum coeffs[i] x^i`` of an :class:`OreAlgebra`."""

    __slots__ = ("algebra", "coeffs", "_hash")

    def __init__(self, algebra: OreAlgebra, coeffs: Iterable[Coefficient]):
        self.algebra = algebra
        self.coeffs = _strip(list(coeffs))
        self._hash = None

    # -- inspection ----------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> Coefficient:
        if not self.coeffs:
            raise ZeroElement("zero element has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Coefficient:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.algebra.coeff_zero()

    def y_degree(self):
        """Largest y-degree among the (polynomial) coefficients."""
        if not self.coeffs:
            return NEG_INF
        return max(_num(c).degree for c in self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, OreElem):
            return self.algebra == other.algebra and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Scalar, Poly, RatFunc)):
            return self == self.algebra(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> Optional["OreElem"]:
        if isinstance(other, OreElem):
            if other.algebra != self.algebra:
                raise AlgebraMismatch("elements of different algebras")
            return other
        if isinstance(other, (int, Fraction, Scalar, Poly, RatFunc)):
            return self.algebra(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return OreElem(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return OreElem(self.algebra, [-c for c in self.coeffs])

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

    def scale(self, r) -> "OreElem":
        """Left multiplication by a coefficient: ``r * self``."""
        r = self.algebra.coerce(r)
        return OreElem(self.algebra, [r * c for c in self.coeffs])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _mul(self, o)

    def __rmul__(self, other):
        # other is a coefficient standing on the left
        if isinstance(other, (int, Fraction, Scalar, Poly, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        return ore_pow(self, e)

    # -- text ----------------------------------------------------------------

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"OreElem({self})"


def _num(c: Coefficient) -> Poly:
    return c.num if isinstance(c, RatFunc) else c


def _mul(P: OreElem, Q: OreElem) -> OreElem:
    A = P.algebra
    if not P.coeffs or not Q.coeffs:
        return A.zero
    zero = A.coeff_zero()
    out = [zero] * (len(P.coeffs) + len(Q.coeffs) - 1)
    # T runs through x^i Q; each step reuses the previous one
    T = list(Q.coeffs)
    for i, a in enumerate(P.coeffs):
        if i:
            T = A._x_times(T)
        if not a:
            continue
        for j, t in enumerate(T):
            if t:
                out[j] = out[j] + a * t
    return OreElem(A, out)


def ore_mul(P: OreElem, Q: OreElem) -> OreElem:
    if P.algebra != Q.algebra:
        raise AlgebraMismatch("elements of different algebras")
    return _mul(P, Q)


def ore_add(P: OreElem, Q: OreElem) -> OreElem:
    return P + Q


def ore_sub(P: OreElem, Q: OreElem) -> OreElem:
    return P - Q


def ore_scale(r, P: OreElem) -> OreElem:
    return P.scale(r)


def commutator(P: OreElem, Q: OreElem) -> OreElem:
    return ore_mul(P, Q) - ore_mul(Q, P)


def ore_degree(P: OreElem):
    return P.degree


def ore_leading(P: OreElem) -> Coefficient:
    return P.leading


def ore_pow(P: OreElem, e: int) -> OreElem:
    if e < 0:
        raise ValueError("negative exponent")
    result = P.algebra.one
    for _ in range(e):
        result = _mul(result, P)
    return result


def powers(P: OreElem, n: int) -> list:
    """``[P^0, P^1, ..., P^n]``."""
    out = [P.algebra.one]
    for _ in range(n):
        out.append(_mul(out[-1], P))
    return out


def commutes(P: OreElem, Q: OreElem) -> bool:
    return ore_mul(P, Q) == ore_mul(Q, P)


def eval_bivar(f, P: OreElem, Q: OreElem) -> OreElem:
    """Evaluate ``f(P, Q) = sum r_ab P^a Q^b`` with coefficients placed on the left."""
    if P.algebra != Q.algebra:
        raise AlgebraMismatch("elements of different algebras")
    if not commutes(P, Q):
        raise NotCommuting("f(P, Q) is only well defined for commuting P, Q")
    A = P.algebra
    if not f.terms:
        return A.zero
    max_a = max(a for a, _ in f.terms)
    max_b = max(b for _, b in f.terms)
    Ppow, Qpow = powers(P, max_a), powers(Q, max_b)
    total = A.zero
    for (a, b), r in sorted(f.terms.items()):
        total = total + (Ppow[a] * Qpow[b]).scale(r)
    return total


def is_central(P: OreElem) -> bool:
    A = P.algebra
    return commutes(P, A.x) and commutes(P, A.y)


def is_constant_coeff(A: OreAlgebra, r) -> bool:
    return A.is_constant_coeff(r)


def apply_sigma(A: OreAlgebra, r) -> Coefficient:
    return A.apply_sigma(r)


def apply_delta(A: OreAlgebra, r) -> Coefficient:
    return A.apply_delta(r)


def render(P: OreElem) -> str:
    """``(y^2 + 1)*x^3 + (2)*x + (1/2)``: descending powers, parenthesized coefficients."""
    if not P.coeffs:
        return "0"
    parts = []
    for i in range(len(P.coeffs) - 1, -1, -1):
        c = P.coeffs[i]
        if not c:
            continue
        text = f"({c})"
        if i == 1:
            text += "*x"
        elif i > 1:
            text += f"*x^{i}"
        parts.append(text)
    return " + ".join(parts)


# -- presets -----------------------------------------------------------------

def weyl(field: FieldSpec = QQ, coeff_ring: str = POLY_RING) -> OreAlgebra:
    """k[y][x; id, d/dy]: the first Weyl algebra, ``xy - yx = 1``."""
    return OreAlgebra(field, Poly.gen(field), Poly.one(field), coeff_ring, name="weyl")


def qweyl(q, field: FieldSpec = QQ, coeff_ring: str = POLY_RING) -> OreAlgebra:
    """The q-Weyl algebra: ``sigma(y) = q y``, ``delta(y) = 1``."""
    qv = field.convert(q)
    if not qv:
        raise ValueError("q must be nonzero")
    return OreAlgebra(field, Poly(field, [0, qv]), Poly.one(field), coeff_ring, name="qweyl")


def power(p, delta=1, field: FieldSpec = QQ, coeff_ring: str = POLY_RING) -> OreAlgebra:
    """``sigma(y) = p(y)``, ``delta(y)`` given; ``p`` and ``delta`` as Poly or ascending lists."""
    return OreAlgebra(field, _as_poly(field, p), _as_poly(field, delta), coeff_ring, name="power")
