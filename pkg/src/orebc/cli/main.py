"""``orebc`` command-line front end.

Exit codes: 0 success (including an inconclusive NOT FOUND), 1 domain error,
2 syntax or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from ..annihilator import POLY_COEFFS, SCALARS, annihilate, verify
from ..centralizer import centralizer_kbasis, default_y_bound, module_basis
from ..errors import NotFound, OreError, ParseError
from ..ore import commutator, is_central
from .config import AlgebraConfig, build_algebra, load_config
from .jsonio import elem_to_json
from .parser import parse_bivar, parse_ore


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="orebc", description="Exact arithmetic in Ore extensions k[y][x; sigma, delta].")
    ap.add_argument("--preset", choices=["weyl", "qweyl", "power"])
    ap.add_argument("--q", help="q for the qweyl preset")
    ap.add_argument("--field", help="Q (default) or a prime p / GF(p)")
    ap.add_argument("--coeff-ring", choices=["poly", "ratfunc"])
    ap.add_argument("--sigma", help="image of y under sigma, e.g. 'y^2'")
    ap.add_argument("--delta", help="image of y under delta, e.g. '1'")
    ap.add_argument("--config", metavar="PATH", help="key = value algebra description")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("eval", help="canonical form of an expression").add_argument("A")
    for name in ("mul", "add", "sub", "commutator"):
        p = sub.add_parser(name)
        p.add_argument("A")
        p.add_argument("B")

    p = sub.add_parser("centralizer", help="truncated centralizer of A")
    p.add_argument("A")
    p.add_argument("--deg-x", type=int, required=True)
    p.add_argument("--deg-y", type=int)
    p.add_argument("--module-basis", action="store_true")
    p.add_argument("--no-strict", action="store_true",
                   help="report classes even if leading coefficients are not proportional")

    p = sub.add_parser("annihilate", help="search for f(s,t) with f(P,Q) = 0")
    p.add_argument("P")
    p.add_argument("Q")
    p.add_argument("--coeffs", choices=[SCALARS, POLY_COEFFS], default=SCALARS)
    p.add_argument("--max-s", type=int)
    p.add_argument("--max-t", type=int)
    p.add_argument("--max-y", type=int)

    p = sub.add_parser("verify", help="check f(P,Q) = 0")
    p.add_argument("F")
    p.add_argument("P")
    p.add_argument("Q")

    sub.add_parser("central", help="is P in the center").add_argument("P")
    return ap


def _algebra(args):
    cfg = load_config(args.config) if args.config else AlgebraConfig()
    cfg = cfg.merged(field=args.field, coeff_ring=args.coeff_ring, sigma=args.sigma,
                     delta=args.delta, preset=args.preset, q=args.q)
    return build_algebra(cfg)


def _emit(out, args, text: str, payload=None):
    if args.json:
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(text + "\n")


def run(args, out) -> int:
    A = _algebra(args)
    cmd = args.command
    if cmd == "eval":
        P = parse_ore(args.A, A)
        _emit(out, args, str(P), elem_to_json(P))
    elif cmd in ("mul", "add", "sub", "commutator"):
        P, Q = parse_ore(args.A, A), parse_ore(args.B, A)
        R = {"mul": lambda: P * Q, "add": lambda: P + Q, "sub": lambda: P - Q,
             "commutator": lambda: commutator(P, Q)}[cmd]()
        _emit(out, args, str(R), elem_to_json(R))
    elif cmd == "centralizer":
        a = parse_ore(args.A, A)
        by = args.deg_y if args.deg_y is not None else default_y_bound(a, args.deg_x)
        if args.module_basis:
            mb = module_basis(a, args.deg_x, by, strict=not args.no_strict)
            lines = [f"p_{i} = {p}" for i, p in mb.residue_classes.items()]
            lines.append(f"observed rank: {mb.rank} (deg a = {a.degree})")
            if not mb.hypothesis_holds:
                lines.append("warning: leading-coefficient hypothesis fails")
            payload = {"residue_classes": {str(i): elem_to_json(p) for i, p in mb.residue_classes.items()},
                       "rank": mb.rank, "hypothesis_holds": mb.hypothesis_holds,
                       "bounds": {"x": args.deg_x, "y": by}}
            _emit(out, args, "\n".join(lines), payload)
        else:
            kb = centralizer_kbasis(a, args.deg_x, by)
            _emit(out, args, "\n".join(str(e) for e in kb),
                  {"k_basis": [elem_to_json(e) for e in kb], "bounds": {"x": args.deg_x, "y": by}})
    elif cmd == "annihilate":
        P, Q = parse_ore(args.P, A), parse_ore(args.Q, A)
        try:
            f = annihilate(P, Q, args.coeffs, args.max_s, args.max_t, args.max_y)
        except NotFound as nf:
            s, t, y = nf.bounds
            _emit(out, args, f"NOT FOUND (bounds s≤{s} t≤{t} y≤{y})",
                  {"found": False, "bounds": {"s": s, "t": t, "y": y}})
        else:
            terms = [[a, b, [str(v) for v in r.raw]] for (a, b), r in sorted(f.terms.items())]
            _emit(out, args, str(f), {"found": True, "f": str(f), "coeff_mode": f.coeff_mode, "terms": terms})
    elif cmd == "verify":
        f = parse_bivar(args.F, A.field)
        P, Q = parse_ore(args.P, A), parse_ore(args.Q, A)
        ok = verify(f, P, Q)
        _emit(out, args, "true" if ok else "false", {"result": ok})
    elif cmd == "central":
        ok = is_central(parse_ore(args.P, A))
        _emit(out, args, "true" if ok else "false", {"result": ok})
    return 0


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    for stream in (out, err):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return run(args, out)
    except ParseError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 2
    except OreError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    except OSError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 1


def entry() -> None:
    sys.exit(main())
