"""Machine-readable element encoding.

``{"coeffs": [[...], ...], "degree": n, "algebra": {...}}`` where ``coeffs[i]``
holds the ascending y-coefficients (exact strings) of the ``x^i`` coefficient.
Over k(y) each entry is ``{"num": [...], "den": [...]}`` instead.
"""

from __future__ import annotations

from ..ore import OreAlgebra, OreElem
from ..poly import Poly, RatFunc
from .parser import eval_expr, parse_expr


def _poly_strings(p: Poly) -> list:
    return [str(v) for v in p.raw]


def elem_to_json(P: OreElem) -> dict:
    coeffs = []
    for c in P.coeffs:
        if isinstance(c, RatFunc):
            coeffs.append({"num": _poly_strings(c.num), "den": _poly_strings(c.den)})
        else:
            coeffs.append(_poly_strings(c))
    degree = P.degree
    return {
        "coeffs": coeffs,
        "degree": None if degree == float("-inf") else degree,
        "algebra": P.algebra.describe(),
    }


def _poly_text(coeffs: list) -> str:
    terms = [f"({c})*y^{i}" for i, c in enumerate(coeffs) if c not in ("0", "")]
    return " + ".join(terms) if terms else "0"


def elem_from_json(data: dict, A: OreAlgebra) -> OreElem:
    """Rebuild an element by writing it out as text and parsing it in ``A``."""
    parts = []
    for i, c in enumerate(data["coeffs"]):
        if isinstance(c, dict):
            coeff = f"({_poly_text(c['num'])})/({_poly_text(c['den'])})"
        else:
            coeff = f"({_poly_text(c)})"
        parts.append(f"{coeff}*x^{i}")
    src = " + ".join(parts) if parts else "0"
    return eval_expr(parse_expr(src), A)
