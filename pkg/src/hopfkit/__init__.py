"""Exact-arithmetic toolkit for finite-dimensional Hopf algebras.

Everything is computed over cyclotomic fields with rational
coefficients; there is no floating point anywhere.
"""

__version__ = "0.1.0"

from .catalog import build_named, catalog_entries
from .companion import decide_ai, eigendecompose_s2, verify_companion
from .constructions import (bicrossed_product, drinfeld_double, dual_hopf,
                            tensor_product)
from .cyclo import CycloNum, root_of_unity, sqrt_of_root_of_unity
from .hopf import HopfAlgebra, verify_axioms
from .integrals import compute_integrals, verify_identities
from .serialize import load_algebra, save_algebra

__all__ = [
    "CycloNum", "HopfAlgebra", "bicrossed_product", "build_named",
    "catalog_entries", "compute_integrals", "decide_ai", "drinfeld_double",
    "dual_hopf", "eigendecompose_s2", "load_algebra", "root_of_unity",
    "save_algebra", "sqrt_of_root_of_unity", "tensor_product",
    "verify_axioms", "verify_companion", "verify_identities",
]
