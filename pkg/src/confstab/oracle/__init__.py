"""Brute-force integral homology of two-point configuration spaces."""
from .chains import ChainComplex, SparseMatrix, homology, rank_and_torsion
from .deleted import (
    DEFAULT_CELL_BUDGET,
    Config2Result,
    ProductCellComplex,
    config2_homology,
    deleted_product,
    unordered_quotient,
)
from .simplicial import BUILTINS, SimplicialComplex, builtin, load_complex
from .snf import elementary_divisors, smith_normal_form

__all__ = [
    "BUILTINS",
    "ChainComplex",
    "Config2Result",
    "DEFAULT_CELL_BUDGET",
    "ProductCellComplex",
    "SimplicialComplex",
    "SparseMatrix",
    "builtin",
    "config2_homology",
    "deleted_product",
    "elementary_divisors",
    "homology",
    "load_complex",
    "rank_and_torsion",
    "smith_normal_form",
    "unordered_quotient",
]
