"""Truncated centralizers C_S(a) and their residue-class module bases.

The centralizer of ``a`` is infinite dimensional over k, so everything here
works inside the finite box ``deg_x e <= bx``, ``deg_y(coeffs of e) <= by``.
Inside that box ``C_S(a)`` is the kernel of the k-linear map ``e -> [e, a]``.

Under the hypothesis that equal-degree centralizer elements have
k-proportional leading coefficients, ``C_S(a)`` is a free ``k[a]``-module with
one generator per residue class of degrees mod ``deg a`` that occurs; the
generator of a class is any element of minimal degree in it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .errors import HypothesisViolated, NotInCentralizer, ZeroElement
from .linalg import _rref_rows, kernel_of_columns
from .ore import RATFUNC, OreAlgebra, OreElem, commutator, commutes
from .poly import Poly, RatFunc


def default_y_bound(a: OreElem, bx: int) -> int:
    A = a.algebra
    growth = max(A.sigma_y.degree, A.delta_y.degree, 1)
    return int((bx + max(a.degree, 0)) * growth)


def _expand(P: OreElem) -> dict:
    """Sparse coordinates of ``P`` in the basis ``y^c x^d``, keyed ``(c, d)``."""
    out = {}
    for d, coeff in enumerate(P.coeffs):
        for c, v in enumerate(coeff.raw):
            if v:
                out[(c, d)] = v
    return out


def _monomials(bx: int, by: int):
    return [(c, d) for d in range(bx + 1) for c in range(by + 1)]


def _require_poly_ring(a: OreElem):
    if a.algebra.coeff_ring == RATFUNC:
        raise ValueError("centralizer computations need the polynomial coefficient ring")


def centralizer_kbasis(a: OreElem, bx: int, by: Optional[int] = None) -> List[OreElem]:
    """k-basis of ``{e : deg_x e <= bx, deg_y e <= by, ea = ae}``.

    Basis elements come from the null space of ``e -> [e, a]`` in the monomial
    basis ``y^c x^d`` ordered by ``(d, c)``; one element per free monomial.
    """
    if not a:
        raise ZeroElement("centralizer of zero is the whole ring")
    _require_poly_ring(a)
    if by is None:
        by = default_y_bound(a, bx)
    A = a.algebra
    monos = _monomials(bx, by)
    columns = [_expand(commutator(A.monomial(c, d), a)) for c, d in monos]
    kernel = kernel_of_columns(A.field, columns)
    return [_combine(A, monos, v) for v in kernel]


def _combine(A: OreAlgebra, monos, v) -> OreElem:
    F = A.field
    rows: Dict[int, list] = {}
    for (c, d), coef in zip(monos, v):
        if coef:
            row = rows.setdefault(d, [])
            if len(row) <= c:
                row.extend([F.zero()] * (c + 1 - len(row)))
            row[c] = coef
    if not rows:
        return A.zero
    top = max(rows)
    return OreElem(A, [Poly._raw(F, rows.get(d, ())) for d in range(top + 1)])


def _proportional(u, v) -> bool:
    """Whether ``u = alpha v`` for some nonzero alpha in k."""
    if isinstance(u, RatFunc):
        q = u / v
        return q.num.is_constant() and q.den.is_constant()
    return u * v.lc == v * u.lc


def leading_proportionality(a: OreElem, elems: List[OreElem]) -> bool:
    """True iff equal-degree elements of ``elems`` have k-proportional leading coefficients."""
    by_degree: Dict[int, list] = {}
    for e in elems:
        if not commutes(e, a):
            raise NotInCentralizer(f"{e} does not commute with {a}")
        if e:
            by_degree.setdefault(e.degree, []).append(e.leading)
    for leads in by_degree.values():
        first = leads[0]
        if not all(_proportional(l, first) for l in leads[1:]):
            return False
    return True


def sigma_power(A: OreAlgebra, r, n: int):
    for _ in range(n):
        r = A.apply_sigma(r)
    return A.coerce(r)


def leading_relation_holds(a: OreElem, b: OreElem) -> bool:
    """Leading-coefficient identity for a commuting pair:
    ``a_n sigma^n(b_m) == b_m sigma^m(a_n)`` with ``n = deg a``, ``m = deg b``.
    """
    A = a.algebra
    n, m = a.degree, b.degree
    an, bm = a.leading, b.leading
    return an * sigma_power(A, bm, n) == bm * sigma_power(A, an, m)


@dataclass
class CentralizerBasis:
    element_a: OreElem
    degree_bound_x: int
    degree_bound_y: int
    k_basis: List[OreElem]
    residue_classes: Dict[int, OreElem]
    hypothesis_holds: bool = True
    violations: List[int] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.residue_classes)


def _echelon_by_leading(A: OreAlgebra, elems: List[OreElem], bx: int, by: int) -> List[OreElem]:
    """Reduce ``elems`` so that their leading monomials (max in (d, c)) are distinct."""
    F = A.field
    monos = sorted(_monomials(bx, by), key=lambda m: (m[1], m[0]), reverse=True)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for e in elems:
        row = [F.zero()] * len(monos)
        for (c, d), v in _expand(e).items():
            row[index[(c, d)]] = v
        rows.append(row)
    rows, pivots = _rref_rows(F, rows, len(monos))
    return [_combine(A, monos, rows[i]) for i in range(len(pivots))]


def reduce_in_module(e: OreElem, a: OreElem, reps: Dict[int, OreElem]) -> OreElem:
    """Strip ``alpha a^q p_i`` terms off ``e`` while the leading coefficients allow it.

    Returns the remainder; zero means ``e`` lies in the ``k[a]``-span of ``reps``.
    """
    A = a.algebra
    n = a.degree
    apow = [A.one]
    while e:
        j = e.degree
        p = reps.get(j % n)
        if p is None or p.degree > j:
            return e
        q = (j - p.degree) // n
        while len(apow) <= q:
            apow.append(apow[-1] * a)
        cand = apow[q] * p
        if not _proportional(e.leading, cand.leading):
            return e
        alpha = e.leading.lc * A.field.inv(cand.leading.lc)
        e = e - cand.scale(A.field.reduce(alpha))
    return e


def module_basis(a: OreElem, bx: int, by: Optional[int] = None, strict: bool = True) -> CentralizerBasis:
    """Residue-class basis ``{p_i}`` of the truncated centralizer as a ``k[a]``-module.

    ``p_i`` is a minimal-degree element with degree congruent to ``i`` mod
    ``deg a``, and ``p_0 = 1``.  With ``strict`` (the default) a failure of the
    leading-coefficient hypothesis raises :class:`HypothesisViolated`; otherwise
    it is recorded on the result and the classes are still reported.
    """
    if not a:
        raise ZeroElement("centralizer of zero is the whole ring")
    n = a.degree
    if n < 1:
        raise ValueError("module_basis needs deg a >= 1")
    if by is None:
        by = default_y_bound(a, bx)
    A = a.algebra
    kb = centralizer_kbasis(a, bx, by)
    echelon = _echelon_by_leading(A, kb, bx, by)

    seen: Dict[int, OreElem] = {}
    violations = []
    for e in sorted(echelon, key=lambda e: (e.degree, e.leading.degree)):
        d = e.degree
        if d in seen:
            violations.append(d)
            continue
        seen[d] = e.scale(A.field.inv(e.leading.lc))

    classes: Dict[int, OreElem] = {0: A.one}
    for d in sorted(seen):
        classes.setdefault(d % n, seen[d])

    holds = not violations
    if holds:
        holds = all(not reduce_in_module(e, a, classes) for e in kb)
    if not holds and strict:
        where = f" in degree(s) {sorted(set(violations))}" if violations else ""
        raise HypothesisViolated(
            f"centralizer of {a} has non-proportional leading coefficients{where}")
    return CentralizerBasis(a, bx, by, kb, dict(sorted(classes.items())), holds, sorted(set(violations)))
