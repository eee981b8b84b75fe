"""Exact orbifold cohomology of finite-group quotient models.

Twisted/multi-sector enumeration, age gradings, Betti and Hodge tables,
Poincare pairings and cup-product rings, all in exact cyclotomic/rational
arithmetic.
"""

from .cyclo import (
    CycField,
    CycMatrix,
    CycNum,
    cyclotomic_polynomial,
    dft_multiplicities,
    eigenvalue_multiplicities,
    get_field,
    kernel_basis,
)
from .group import FiniteMatrixGroup, TupleClass, generate
from .sectors import (
    MultiSector,
    Sector,
    degree_shift,
    excess_rank,
    fixed_subspace,
    multi_sectors,
    obstruction_rank,
    sector_table,
)

__all__ = [
    "CycField",
    "CycMatrix",
    "CycNum",
    "FiniteMatrixGroup",
    "MultiSector",
    "Sector",
    "TupleClass",
    "cyclotomic_polynomial",
    "degree_shift",
    "dft_multiplicities",
    "eigenvalue_multiplicities",
    "excess_rank",
    "fixed_subspace",
    "generate",
    "get_field",
    "kernel_basis",
    "multi_sectors",
    "obstruction_rank",
    "sector_table",
]

__version__ = "0.1.0"
