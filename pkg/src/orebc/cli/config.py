"""Algebra configuration: presets, ``key = value`` files and command-line overrides."""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from ..errors import ConfigError
from ..ore import POLY_RING, RATFUNC, OreAlgebra, power, qweyl, weyl
from ..poly import Poly
from ..scalars import FieldSpec
from .parser import parse_bivar, parse_scalar

KEYS = ("field", "coeff_ring", "sigma", "delta", "preset", "q")
PRESETS = ("weyl", "qweyl", "power")


@dataclass(frozen=True)
class AlgebraConfig:
    field: str = "Q"
    coeff_ring: str = POLY_RING
    sigma: Optional[str] = None
    delta: Optional[str] = None
    preset: Optional[str] = None
    q: Optional[str] = None

    def merged(self, **overrides) -> "AlgebraConfig":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def parse_config_text(text: str) -> AlgebraConfig:
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        values[key] = value
    return AlgebraConfig(**values)


def load_config(path) -> AlgebraConfig:
    return parse_config_text(Path(path).read_text())


def _poly(text: str, F: FieldSpec, what: str) -> Poly:
    f = parse_bivar(text, F)
    if any(ab != (0, 0) for ab in f.terms):
        raise ConfigError(f"{what} must be a polynomial in y, got {text!r}")
    return f.terms.get((0, 0), Poly.zero(F))


def build_algebra(cfg: AlgebraConfig) -> OreAlgebra:
    """Turn a configuration into an :class:`OreAlgebra`.

    ``preset`` picks the shape (``weyl``, ``qweyl`` with ``q``, ``power`` with
    ``sigma`` and optional ``delta``); without a preset ``sigma`` and ``delta``
    are both required.
    """
    try:
        F = FieldSpec.parse(cfg.field)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    ring = cfg.coeff_ring
    if ring not in (POLY_RING, RATFUNC):
        raise ConfigError(f"coeff_ring must be {POLY_RING!r} or {RATFUNC!r}")
    preset = cfg.preset
    try:
        if preset == "weyl":
            return weyl(F, ring)
        if preset == "qweyl":
            if cfg.q is None:
                raise ConfigError("qweyl needs q")
            return qweyl(parse_scalar(cfg.q, F), F, ring)
        if preset not in (None, "power"):
            raise ConfigError(f"unknown preset {preset!r} (choose from {', '.join(PRESETS)})")
        if cfg.sigma is None:
            raise ConfigError("sigma (the image of y) is required")
        sigma = _poly(cfg.sigma, F, "sigma")
        if preset == "power":
            delta = _poly(cfg.delta, F, "delta") if cfg.delta is not None else Poly.one(F)
            return power(sigma, delta, F, ring)
        if cfg.delta is None:
            raise ConfigError("delta (the image of y) is required")
        return OreAlgebra(F, sigma, _poly(cfg.delta, F, "delta"), ring)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None

