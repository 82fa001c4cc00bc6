"""Exact univariate polynomial arithmetic over Z, Q and F_p."""

from .intpoly import IntPoly, cyclotomic, format_poly, real_root_count
from .modp import ModPoly, factor_mod_p, roots_mod_p
from .parse import PolyParseError, parse_factors, parse_poly
from .resultant import discriminant, gcd, resultant, squarefree_decomposition, squarefree_part
from .zassenhaus import (
    QFactorization,
    cycle_type,
    factor_int_squarefree,
    factor_over_rationals,
    is_irreducible,
)

__all__ = [
    "IntPoly",
    "ModPoly",
    "PolyParseError",
    "QFactorization",
    "cycle_type",
    "cyclotomic",
    "discriminant",
    "factor_int_squarefree",
    "factor_mod_p",
    "factor_over_rationals",
    "format_poly",
    "gcd",
    "is_irreducible",
    "parse_factors",
    "parse_poly",
    "real_root_count",
    "resultant",
    "roots_mod_p",
    "squarefree_decomposition",
    "squarefree_part",
]
