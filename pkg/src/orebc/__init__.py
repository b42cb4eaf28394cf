"""Exact arithmetic in Ore extensions k[y][x; sigma, delta], with centralizer
and annihilating-polynomial searches for commuting pairs."""

from .annihilator import BivarPoly, annihilate, normalize, verify
from .centralizer import CentralizerBasis, centralizer_kbasis, leading_proportionality, module_basis
from .errors import (AlgebraMismatch, BothZero, DivisionByZero, ExponentError, FieldMismatch,
                     HypothesisViolated, NotCommuting, NotFound, NotInCentralizer, OreError,
                     ParseError, ZeroElement, ZeroPolynomial)
from .linalg import Matrix, kernel_basis, rank, rref
from .ore import (OreAlgebra, OreElem, commutator, eval_bivar, is_central, power, qweyl,
                  weyl)
from .poly import NEG_INF, Poly, RatFunc, check_functional_eq, poly_gcd
from .scalars import QQ, FieldSpec, Scalar, characteristic

__version__ = "0.1.0"
