"""Exact scalar, polynomial and linear algebra primitives."""

from .scalars import QQ, GF, PrimeField, NumberField, NFElem, Fp, is_probable_prime
from .poly import UniPoly, poly_gcd, poly_xgcd, poly_powmod, resultant, discriminant
from .ratfunc import RationalFunctionField, RatFunc, valuation, ratfunc_valuation
from .multipoly import MultiPolyLite
from .factor import (squarefree_decomposition, squarefree_part, poly_gcd_squarefree,
                     factor_mod_p, is_irreducible_mod_p, roots_in_field, RootList)
from .linalg import (det_bareiss, charpoly_berkowitz, det_charpoly, solve_or_invert,
                     snf_with_transforms, hnf_with_transform, invariant_factors)
from .lll import lll_reduce, lll_reduce_int, is_lll_reduced

__all__ = [
    "QQ", "GF", "PrimeField", "NumberField", "NFElem", "Fp", "is_probable_prime",
    "UniPoly", "poly_gcd", "poly_xgcd", "poly_powmod", "resultant", "discriminant",
    "RationalFunctionField", "RatFunc", "valuation", "ratfunc_valuation",
    "MultiPolyLite",
    "squarefree_decomposition", "squarefree_part", "poly_gcd_squarefree",
    "factor_mod_p", "is_irreducible_mod_p", "roots_in_field", "RootList",
    "det_bareiss", "charpoly_berkowitz", "det_charpoly", "solve_or_invert",
    "snf_with_transforms", "hnf_with_transform", "invariant_factors",
    "lll_reduce", "lll_reduce_int", "is_lll_reduced",
]
