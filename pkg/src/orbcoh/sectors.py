"""Twisted sectors and multi-sectors as decorated conjugacy data.

The sector set of a quotient is indexed by conjugacy classes; a k-multi-
sector by simultaneous-conjugacy classes of k-tuples.  Everything a sector
carries here is exact combinatorial data: its age (degree-shifting number),
the dimension of the joint fixed subspace, centralizer order, and the
obstruction/excess rank arithmetic used by the cup product and the index
gluing identity.  The underlying sector spaces are never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import CycMatrix, eigenvalue_multiplicities, from_columns, kernel_basis, matrix_rank, vstack
from .errors import InternalInconsistency, ProductNotIdentity
from .group import FiniteMatrixGroup, TupleClass


@lru_cache(maxsize=None)
def element_exponents(group: FiniteMatrixGroup, index: int) -> tuple[int, ...]:
    """The n eigenvalue exponents of an element, ascending, in [0, order)."""
    m = group.order_of[index]
    mults = eigenvalue_multiplicities(group.elements[index], m)
    return tuple(j for j, mult in enumerate(mults) for _ in range(mult))


@lru_cache(maxsize=None)
def degree_shift(group: FiniteMatrixGroup, index: int) -> Fraction:
    """Age of an element: sum of eigenvalue exponents m_i/m over 0 <= m_i < m."""
    m = group.order_of[index]
    return sum((Fraction(j, m) for j in element_exponents(group, index)), Fraction(0))


@lru_cache(maxsize=None)
def fixed_subspace(group: FiniteMatrixGroup, indices: tuple[int, ...]):
    """Echelon basis and dimension of the joint fixed subspace of a tuple."""
    ident = CycMatrix.identity(group.field, group.n)
    if not indices:
        indices = (0,)
    stacked = vstack([group.elements[i] - ident for i in indices])
    basis, _ = kernel_basis(stacked)
    return basis, len(basis)


def fixed_dim(group: FiniteMatrixGroup, indices: tuple[int, ...]) -> int:
    return fixed_subspace(group, indices)[1]


@dataclass(frozen=True)
class Sector:
    """One twisted (or the untwisted) sector: a decorated conjugacy class."""

    representative: int
    members: tuple[int, ...]
    centralizer_order: int
    iota: Fraction
    fixed_dim: int
    is_untwisted: bool

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def label(self) -> str:
        return f"(g{self.representative})"


@dataclass(frozen=True)
class MultiSector:
    """A k-multi-sector: a decorated simultaneous-conjugacy tuple class."""

    tuple_class: TupleClass
    iotas: tuple[Fraction, ...]
    joint_fixed_dim: int
    component_classes: tuple[int, ...]
    product_class: int

    @property
    def representative(self) -> tuple[int, ...]:
        return self.tuple_class.representative

    @property
    def label(self) -> str:
        return "(" + ",".join(f"g{i}" for i in self.representative) + ")"


def sector_table(group: FiniteMatrixGroup) -> list[Sector]:
    """All sectors, sorted by (age, class size, representative index)."""
    out = []
    for cls in group.conjugacy_classes():
        rep = cls.representative
        out.append(
            Sector(
                representative=rep,
                members=cls.members,
                centralizer_order=cls.centralizer_order,
                iota=degree_shift(group, rep),
                fixed_dim=fixed_dim(group, (rep,)),
                is_untwisted=rep == 0,
            )
        )
    out.sort(key=lambda s: (s.iota, s.size, s.representative))
    return out


def multi_sectors(
    group: FiniteMatrixGroup, k: int, product_one: bool, cap: int | None = None
) -> list[MultiSector]:
    """Decorated tuple classes; with k=3 and product_one this indexes the 3-point function."""
    out = []
    for tc in group.tuple_classes(k, product_one, cap=cap):
        rep = tc.representative
        out.append(
            MultiSector(
                tuple_class=tc,
                iotas=tuple(degree_shift(group, i) for i in rep),
                joint_fixed_dim=fixed_dim(group, rep),
                component_classes=tuple(group.class_of(i) for i in rep),
                product_class=group.class_of(tc.product_index),
            )
        )
    return out


def _require_product_one(group: FiniteMatrixGroup, indices, k: int):
    indices = tuple(indices)
    if len(indices) != k:
        raise ProductNotIdentity(f"expected a {k}-tuple, got {len(indices)} entries")
    if group.product(indices) != 0:
        raise ProductNotIdentity("tuple product is not the identity")
    return indices


def obstruction_rank(group: FiniteMatrixGroup, indices) -> int:
    """Rank of the obstruction bundle over a product-one 3-sector.

    rank = dim V^(g1,g2,g3) - n + iota(g1) + iota(g2) + iota(g3); this is a
    nonnegative integer for every finite matrix group, SL or not.
    """
    indices = _require_product_one(group, indices, 3)
    total = sum((degree_shift(group, i) for i in indices), Fraction(0))
    rank = fixed_dim(group, indices) - group.n + total
    if rank.denominator != 1 or rank < 0:
        raise InternalInconsistency(f"obstruction rank {rank} is not a nonnegative integer")
    return int(rank)


def excess_rank(group: FiniteMatrixGroup, indices) -> int:
    """Rank of the excess bundle of a product-one 4-tuple.

    rank = dim V^(g1 g2) - dim(V^g1 n V^g2 + V^g3 n V^g4), the failure of
    transversality at the node of the glued 3-sectors.
    """
    indices = _require_product_one(group, indices, 4)
    g1, g2, g3, g4 = indices
    g = group.inv[group.mul[g1][g2]]
    basis12, _ = fixed_subspace(group, (g1, g2))
    basis34, _ = fixed_subspace(group, (g3, g4))
    columns = list(basis12) + list(basis34)
    if columns:
        sum_dim = matrix_rank(from_columns(group.field, columns, group.n))
    else:
        sum_dim = 0
    rank = fixed_dim(group, (g,)) - sum_dim
    if rank < 0:
        raise InternalInconsistency(f"excess rank {rank} is negative")
    return rank
