"""Finite matrix groups over cyclotomic fields.

A group is fully enumerated from its generators by breadth-first closure;
the BFS discovery order (identity first) is the canonical element order, so
representatives and CLI output are reproducible run to run.  Conjugacy
classes of elements and of k-tuples under simultaneous conjugation are
computed by exhaustive orbit enumeration, guarded by explicit caps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as iter_product

from .cyclo import CycField, CycMatrix
from .errors import ClosureCapExceeded, EnumerationCapExceeded, NonInvertibleGenerator

DEFAULT_CLOSURE_CAP = 100_000
DEFAULT_TUPLE_CAP = 10_000_000


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple[int, ...]
    centralizer_order: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class TupleClass:
    """A simultaneous-conjugacy class of k-tuples of element indices."""

    k: int
    representative: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    centralizer_order: int
    product_index: int

    @property
    def size(self) -> int:
        return len(self.members)


class FiniteMatrixGroup:
    """A fully enumerated finite subgroup of GL(n, Q(zeta_N)).

    Immutable once generated; index 0 is always the identity.  All
    group-theoretic queries run on the integer composition table.
    """

    def __init__(self, field, n, elements, mul, inv, order_of, generators, exponent, is_sl):
        self.field: CycField = field
        self.n: int = n
        self.elements: list[CycMatrix] = elements
        self.mul: list[list[int]] = mul
        self.inv: list[int] = inv
        self.order_of: list[int] = order_of
        self.generators: list[int] = generators
        self.exponent: int = exponent
        self.is_sl: bool = is_sl
        self._classes: list[ConjugacyClass] | None = None
        self._class_of: list[int] | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def product(self, indices) -> int:
        acc = 0
        for i in indices:
            acc = self.mul[acc][i]
        return acc

    def conjugate(self, x: int, by: int) -> int:
        return self.mul[self.mul[by][x]][self.inv[by]]

    def element_order(self, i: int) -> int:
        return self.order_of[i]

    def conjugacy_classes(self) -> list[ConjugacyClass]:
        """Classes in order of least member index; representative = least index."""
        if self._classes is None:
            size = self.order
            class_of = [-1] * size
            classes = []
            for i in range(size):
                if class_of[i] >= 0:
                    continue
                orbit = sorted({self.conjugate(i, s) for s in range(size)})
                for x in orbit:
                    class_of[x] = len(classes)
                classes.append(ConjugacyClass(orbit[0], tuple(orbit), size // len(orbit)))
            self._classes = classes
            self._class_of = class_of
        return self._classes

    def class_of(self, i: int) -> int:
        self.conjugacy_classes()
        return self._class_of[i]

    def centralizer(self, indices) -> tuple[list[int], int]:
        """Elements commuting with every entry of the tuple, and their count."""
        members = [
            s
            for s in range(self.order)
            if all(self.mul[s][x] == self.mul[x][s] for x in indices)
        ]
        return members, len(members)

    def tuple_classes(self, k: int, product_one: bool, cap: int | None = None) -> list[TupleClass]:
        """Simultaneous-conjugacy classes of k-tuples, optionally with product 1.

        Tuples are enumerated exhaustively (the last entry is forced when
        product_one); representatives are the lexicographically least members.
        """
        if k < 1:
            raise ValueError("tuple arity must be >= 1")
        cap = DEFAULT_TUPLE_CAP if cap is None else cap
        if self.order ** k > cap:
            raise EnumerationCapExceeded(
                f"|G|^k = {self.order ** k} exceeds the enumeration cap {cap}"
            )
        size = self.order
        if product_one:
            tuples = (
                prefix + (self.inv[self.product(prefix)],)
                for prefix in iter_product(range(size), repeat=k - 1)
            )
        else:
            tuples = iter_product(range(size), repeat=k)
        seen: set[tuple[int, ...]] = set()
        out = []
        for t in tuples:
            if t in seen:
                continue
            orbit = {tuple(self.conjugate(x, s) for x in t) for s in range(size)}
            seen |= orbit
            members = tuple(sorted(orbit))
            out.append(
                TupleClass(k, members[0], members, size // len(orbit), self.product(t))
            )
        out.sort(key=lambda c: c.representative)
        return out


def generate(field: CycField, n: int, generators, cap: int = DEFAULT_CLOSURE_CAP) -> FiniteMatrixGroup:
    """Enumerate the group generated by the given matrices.

    Breadth-first closure with canonical-form deduplication; raises
    ClosureCapExceeded if the element count would exceed the cap and
    NonInvertibleGenerator on a singular or misshapen generator.
    """
    gens = list(generators)
    for g in gens:
        if not isinstance(g, CycMatrix) or g.rows != n or g.cols != n or g.field != field:
            raise NonInvertibleGenerator(f"generator is not a {n}x{n} matrix over the field")
        if g.det().is_zero():
            raise NonInvertibleGenerator("generator has determinant zero")
    ident = CycMatrix.identity(field, n)
    elements = [ident]
    index = {ident: 0}
    parent = [0]
    via = [0]
    gen_step: list[list[int]] = []
    i = 0
    while i < len(elements):
        row = []
        for j, g in enumerate(gens):
            p = elements[i] * g
            k = index.get(p)
            if k is None:
                if len(elements) >= cap:
                    raise ClosureCapExceeded(f"group closure exceeds cap {cap}")
                k = len(elements)
                elements.append(p)
                index[p] = k
                parent.append(i)
                via.append(j)
            row.append(k)
        gen_step.append(row)
        i += 1

    size = len(elements)
    # elements[j] = elements[parent[j]] * gens[via[j]], so the composition
    # table fills by index chasing with no further matrix products.
    mul = [[0] * size for _ in range(size)]
    for a in range(size):
        mul[a][0] = a
    for j in range(1, size):
        pj, vj = parent[j], via[j]
        for a in range(size):
            mul[a][j] = gen_step[mul[a][pj]][vj]

    inv = [-1] * size
    for a in range(size):
        inv[a] = mul[a].index(0)

    order_of = []
    for a in range(size):
        k, o = a, 1
        while k != 0:
            k = mul[k][a]
            o += 1
        order_of.append(o)

    exponent = 1
    for o in order_of:
        exponent = math.lcm(exponent, o)

    one = field.one()
    is_sl = all(g.det() == one for g in gens)

    gen_indices = [index[g] for g in gens]
    return FiniteMatrixGroup(field, n, elements, mul, inv, order_of, gen_indices, exponent, is_sl)
