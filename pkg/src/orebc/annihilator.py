"""Search for annihilating polynomials f(s, t) of commuting pairs (P, Q).

``f = sum r_ab s^a t^b`` annihilates (P, Q) when ``sum r_ab P^a Q^b = 0``
(coefficients on the left).  With coefficients in k the search is a null
space computation over the columns ``P^a Q^b``; with coefficients in k[y]
the columns are ``y^c P^a Q^b``.  A failed search only means nothing was
found inside the given degree box.
"""

from __future__ import annotations

import os
from typing import Dict, Iterator, Optional, Tuple

from .errors import NotCommuting, NotFound, ZeroElement, ZeroPolynomial
from .linalg import kernel_of_columns
from .ore import OreElem, commutes, eval_bivar, powers
from .poly import Poly, RatFunc, poly_gcd

SCALARS = "scalars"
POLY_COEFFS = "poly"

DEFAULT_CAP = 16


class BivarPoly:
    """Commutative ``f(s, t)`` with coefficients in k (``scalars``) or k[y] (``poly``).

    ``terms`` maps ``(a, b)`` to a :class:`Poly`; in ``scalars`` mode every
    coefficient is a constant polynomial.
    """

    __slots__ = ("field", "coeff_mode", "terms")

    def __init__(self, field, terms: Dict[Tuple[int, int], object], coeff_mode: Optional[str] = None):
        clean = {}
        for (a, b), r in terms.items():
            if a < 0 or b < 0:
                raise ValueError("exponents must be natural numbers")
            r = r if isinstance(r, Poly) else Poly.const(field, r)
            if r:
                clean[(a, b)] = r
        if coeff_mode is None:
            coeff_mode = SCALARS if all(r.is_constant() for r in clean.values()) else POLY_COEFFS
        if coeff_mode == SCALARS and not all(r.is_constant() for r in clean.values()):
            raise ValueError("scalar-mode polynomial with non-constant coefficient")
        if coeff_mode not in (SCALARS, POLY_COEFFS):
            raise ValueError(f"unknown coefficient mode {coeff_mode!r}")
        self.field = field
        self.coeff_mode = coeff_mode
        self.terms = clean

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def ordered_terms(self):
        """Terms in graded-lex order, leading term first."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        return self.ordered_terms()[0]

    @property
    def s_degree(self) -> int:
        return max((a for a, _ in self.terms), default=-1)

    @property
    def t_degree(self) -> int:
        return max((b for _, b in self.terms), default=-1)

    @property
    def y_degree(self) -> int:
        return max((r.degree for r in self.terms.values()), default=-1)

    def __str__(self):
        return render_bivar(self)

    def __repr__(self):
        return f"BivarPoly({self})"


def _mono(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("s" if a == 1 else f"s^{a}")
    if b:
        parts.append("t" if b == 1 else f"t^{b}")
    return "*".join(parts)


def render_bivar(f: BivarPoly) -> str:
    """``s^3 - t^2`` in scalar mode, ``(y^2)*t - (y^4)`` in poly mode."""
    if not f.terms:
        return "0"
    out = []
    for (a, b), r in f.ordered_terms():
        negative = _is_negative(r)
        if negative:
            r = -r
        mono = _mono(a, b)
        if f.coeff_mode == SCALARS:
            c = str(r.lc)
        else:
            c = f"({r})"
        if not mono:
            body = c
        elif r == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if not out:
            out.append(("-" if negative else "") + body)
        else:
            out.append(("- " if negative else "+ ") + body)
    return " ".join(out)


def _is_negative(r: Poly) -> bool:
    # only meaningful over Q; residues in GF(p) carry no sign
    return r.field.modulus is None and r.lc < 0


def normalize(f: BivarPoly) -> BivarPoly:
    """Canonical representative of ``f`` up to units (and content in poly mode).

    Scalar mode: the graded-lex leading coefficient becomes 1.  Poly mode: the
    gcd of all coefficients is divided out and the leading coefficient made monic.
    """
    if not f.terms:
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    F = f.field
    terms = dict(f.terms)
    if f.coeff_mode == POLY_COEFFS:
        content = Poly.zero(F)
        for r in terms.values():
            content = poly_gcd(content, r)
        if not content.is_constant():
            terms = {k: r.exact_div(content) for k, r in terms.items()}
    lead = BivarPoly(F, terms, f.coeff_mode).leading_term()[1].lc
    inv = F.inv(lead)
    return BivarPoly(F, {k: r.scale(inv) for k, r in terms.items()}, f.coeff_mode)


def verify(f: BivarPoly, P: OreElem, Q: OreElem) -> bool:
    if not f.terms:
        raise ZeroPolynomial("the zero polynomial annihilates everything")
    if not commutes(P, Q):
        raise NotCommuting("P and Q do not commute")
    return not eval_bivar(f, P, Q)


def _coordinates(E: OreElem, denom: Optional[Poly]) -> dict:
    """Sparse coordinates of ``denom * E`` in the basis ``y^c x^d`` keyed ``(c, d)``."""
    out = {}
    for d, r in enumerate(E.coeffs):
        if isinstance(r, RatFunc):
            r = (r.num * denom).exact_div(r.den)
        for c, v in enumerate(r.raw):
            if v:
                out[(c, d)] = v
    return out


def _search(P: OreElem, Q: OreElem, mode: str, max_s: int, max_t: int, max_y: int,
            Ppow=None, Qpow=None) -> Optional[BivarPoly]:
    A = P.algebra
    F = A.field
    Ppow = Ppow or powers(P, max_s)
    Qpow = Qpow or powers(Q, max_t)
    products = {(a, b): Ppow[a] * Qpow[b] for a in range(max_s + 1) for b in range(max_t + 1)}
    denom = None
    if any(isinstance(r, RatFunc) for E in products.values() for r in E.coeffs):
        # left multiplication by a common denominator is injective
        denom = Poly.one(F)
        for E in products.values():
            for r in E.coeffs:
                denom = (denom * r.den).exact_div(poly_gcd(denom, r.den))
    index = [(c, a, b) for c in range(max_y + 1) for a in range(max_s + 1) for b in range(max_t + 1)]
    base = {ab: _coordinates(E, denom) for ab, E in products.items()}
    columns = [{(k[0] + c, k[1]): v for k, v in base[(a, b)].items()} for c, a, b in index]
    kernel = kernel_of_columns(F, columns)
    if not kernel:
        return None
    terms: Dict[Tuple[int, int], list] = {}
    for (c, a, b), v in zip(index, kernel[0]):
        if v:
            row = terms.setdefault((a, b), [F.zero()] * (max_y + 1))
            row[c] = v
    f = BivarPoly(F, {k: Poly._raw(F, v) for k, v in terms.items()},
                  SCALARS if mode == SCALARS else POLY_COEFFS)
    return normalize(f)


def max_cap() -> int:
    env = os.environ.get("OREBC_MAX_CAP")
    return int(env) if env else DEFAULT_CAP


def bound_schedule(P: OreElem, Q: OreElem, mode: str, max_s=None, max_t=None, max_y=None,
                   cap: Optional[int] = None) -> Iterator[Tuple[int, int, int]]:
    """Bound triples to try, in order.

    Fixed bounds stay fixed; missing ones start at ``s = deg Q``, ``t = deg P``,
    ``y = 0`` and double (``y`` goes 0, 1, 2, 4, ...) until they pass ``cap``.
    """
    cap = max_cap() if cap is None else cap
    fixed = (max_s is not None, max_t is not None, max_y is not None or mode == SCALARS)
    s = max_s if max_s is not None else min(max(int(Q.degree), 1), cap)
    t = max_t if max_t is not None else min(max(int(P.degree), 1), cap)
    y = 0 if mode == SCALARS else (max_y if max_y is not None else 0)
    while True:
        yield s, t, y
        if all(fixed):
            return
        ns = s if fixed[0] else min(2 * s, cap)
        nt = t if fixed[1] else min(2 * t, cap)
        ny = y if fixed[2] else min(max(1, 2 * y), cap)
        if (ns, nt, ny) == (s, t, y):
            return
        s, t, y = ns, nt, ny


def annihilate(P: OreElem, Q: OreElem, mode: str = SCALARS, max_s: Optional[int] = None,
               max_t: Optional[int] = None, max_y: Optional[int] = None,
               cap: Optional[int] = None) -> BivarPoly:
    """Nonzero ``f`` with ``f(P, Q) = 0`` inside the degree box, normalized.

    Bounds left as ``None`` follow :func:`bound_schedule`.  Raises
    :class:`NotFound` (carrying the last bounds tried) when the box is exhausted.
    """
    if mode not in (SCALARS, POLY_COEFFS):
        raise ValueError(f"unknown coefficient mode {mode!r}")
    if not P or not Q:
        raise ZeroElement("annihilate needs nonzero P and Q")
    if not commutes(P, Q):
        raise NotCommuting("P and Q do not commute")
    last = None
    Ppow, Qpow = [P.algebra.one], [P.algebra.one]
    for s, t, y in bound_schedule(P, Q, mode, max_s, max_t, max_y, cap):
        while len(Ppow) <= s:
            Ppow.append(Ppow[-1] * P)
        while len(Qpow) <= t:
            Qpow.append(Qpow[-1] * Q)
        f = _search(P, Q, mode, s, t, y, Ppow[: s + 1], Qpow[: t + 1])
        if f is not None:
            return f
        last = (s, t, y)
    raise NotFound(*last)
