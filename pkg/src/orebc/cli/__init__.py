from .main import main
from .parser import eval_expr, parse_bivar, parse_expr, parse_ore

__all__ = ["main", "parse_expr", "eval_expr", "parse_ore", "parse_bivar"]
