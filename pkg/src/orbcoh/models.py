"""Orbifold Betti/Hodge tables for the four model families.

point/G       all classes contribute in degree 0.
C^n/G         one (iota, iota) class per conjugacy class.
T^2n/G        global torus quotients: sector cohomology from fixed-locus
              combinatorics (Smith form) and centralizer character averaging.
catalogs      closed forms: the involution threefold family classified by
              Nikulin triples, and weighted projective lines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product

from . import snf
from .cyclo import CycMatrix, get_field
from .errors import (
    EnumerationCapExceeded,
    InternalInconsistency,
    InvalidNikulinTriple,
    ModelViolation,
    NotCoprime,
)
from .group import FiniteMatrixGroup, generate
from .sectors import degree_shift

TORUS_COMPONENT_CAP = 1_000_000


def format_degree(d) -> str:
    """Canonical string for a rational degree or bidegree."""
    if isinstance(d, tuple):
        return ",".join(format_degree(x) for x in d)
    f = Fraction(d)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _degree_sort_key(d):
    if isinstance(d, tuple):
        return tuple(Fraction(x) for x in d)
    return (Fraction(d),)


@dataclass
class CohomologyTable:
    """A graded (or bigraded) dimension table with a per-sector breakdown."""

    model: str
    entries: dict = field(default_factory=dict)
    sectors: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def add(self, degree, dim: int, sector: str | None = None):
        self.entries[degree] = self.entries.get(degree, 0) + dim
        if sector is not None:
            per = self.sectors.setdefault(sector, {})
            per[degree] = per.get(degree, 0) + dim

    def total(self) -> int:
        return sum(self.entries.values())

    def sorted_entries(self):
        return sorted(self.entries.items(), key=lambda kv: _degree_sort_key(kv[0]))

    def to_json_dict(self) -> dict:
        out = {
            "model": self.model,
            "entries": {format_degree(d): dim for d, dim in self.sorted_entries()},
            "total": self.total(),
        }
        if self.meta:
            out["meta"] = {k: format_degree(v) if isinstance(v, Fraction) else v for k, v in self.meta.items()}
        if self.sectors:
            out["sectors"] = {
                label: {format_degree(d): dim for d, dim in sorted(per.items(), key=lambda kv: _degree_sort_key(kv[0]))}
                for label, per in self.sectors.items()
            }
        return out


def cohomology_point(group: FiniteMatrixGroup) -> CohomologyTable:
    """point/G: one degree-0 class per conjugacy class."""
    table = CohomologyTable(model=f"point quotient, |G| = {group.order}")
    for cls in group.conjugacy_classes():
        table.add(Fraction(0), 1, sector=f"(g{cls.representative})")
    return table


def hodge_linear(group: FiniteMatrixGroup, n: int | None = None) -> CohomologyTable:
    """C^n/G: class of g contributes 1 in bidegree (iota, iota).

    Non-SL groups give fractional bidegrees, reported exactly.
    """
    n = group.n if n is None else n
    table = CohomologyTable(model=f"linear quotient C^{n}/G, |G| = {group.order}")
    for cls in group.conjugacy_classes():
        iota = degree_shift(group, cls.representative)
        table.add((iota, iota), 1, sector=f"(g{cls.representative})")
    return table


class TorusModel:
    """An even torus R^2n/Z^2n with a finite group of lattice automorphisms
    commuting with the standard complex structure J0 = [[0, -I], [I, 0]].

    Each generator must be an integer matrix with |det| = 1; the complex
    form of a generator [[P, -Q], [Q, P]] is the n x n matrix P + iQ over
    the Gaussian rationals.
    """

    def __init__(self, dim: int, generators):
        if dim <= 0 or dim % 2:
            raise ModelViolation(f"torus dimension must be even and positive, got {dim}")
        self.dim = dim
        self.n = dim // 2
        gens = [tuple(tuple(int(x) for x in row) for row in g) for g in generators]
        for g in gens:
            if len(g) != dim or any(len(r) != dim for r in g):
                raise ModelViolation(f"generator is not a {dim}x{dim} matrix")
            if not self._commutes_with_j0(g):
                raise ModelViolation("generator does not commute with the complex structure J0")
            if abs(snf.rational_det(g)) != 1:
                raise ModelViolation("generator is not unimodular")
        self.generators = gens

    def _commutes_with_j0(self, g) -> bool:
        n, d = self.n, self.dim
        j0 = [[0] * d for _ in range(d)]
        for i in range(n):
            j0[i][n + i] = -1
            j0[n + i][i] = 1
        return snf.mat_mul(g, j0) == snf.mat_mul(j0, g)

    def complex_generators(self) -> list[CycMatrix]:
        field4 = get_field(4)
        out = []
        for g in self.generators:
            rows = []
            for i in range(self.n):
                row = []
                for j in range(self.n):
                    p, q = g[i][j], g[self.n + i][j]
                    row.append(field4.element([p, q]))
                rows.append(row)
            out.append(CycMatrix.from_rows(field4, rows))
        return out

    def group(self, cap: int | None = None) -> FiniteMatrixGroup:
        kwargs = {} if cap is None else {"cap": cap}
        return generate(get_field(4), self.n, self.complex_generators(), **kwargs)


def _integer_matrix_of(element: CycMatrix, n: int):
    """Recover the real 2n x 2n integer matrix from its complex form."""
    p = [[None] * n for _ in range(n)]
    q = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            coeffs = element.entry(i, j).coeffs
            a, b = coeffs[0], coeffs[1]
            if a.denominator != 1 or b.denominator != 1:
                raise InternalInconsistency("torus group element is not integral")
            p[i][j], q[i][j] = int(a), int(b)
    top = [p[i] + [-x for x in q[i]] for i in range(n)]
    bottom = [q[i] + p[i] for i in range(n)]
    return top + bottom


def _char_poly_elementary(m):
    """Coefficients [e_0..e_r] of det(I + tM), via Faddeev-LeVerrier."""
    r = len(m)
    elem = [Fraction(1)]
    if r == 0:
        return elem
    mm = [[Fraction(x) for x in row] for row in m]
    acc = [[Fraction(1) if i == j else Fraction(0) for j in range(r)] for i in range(r)]
    for k in range(1, r + 1):
        acc = snf.mat_mul(mm, acc)
        ck = -Fraction(sum(acc[i][i] for i in range(r)), k)
        elem.append((-1) ** k * ck)
        for i in range(r):
            acc[i][i] += ck
    return elem


def _restrict_to_kernel(h, kernel_basis, free_cols):
    """Matrix of h on span(kernel_basis), read off at the free columns."""
    r = len(kernel_basis)
    if r == 0:
        return []
    cols = []
    for v in kernel_basis:
        image = snf.mat_vec(h, v)
        cols.append([image[f] for f in free_cols])
    return [[cols[j][i] for j in range(r)] for i in range(r)]


def betti_torus(model: TorusModel, cap: int | None = None) -> CohomologyTable:
    """Orbifold Betti numbers of a torus quotient.

    Per class of g with matrix A and B = A - I: the fixed locus has
    prod(nonzero invariant factors of B) parallel components of dimension
    dim ker B; the sector dimensions are centralizer averages of
    (components fixed by h) * tr(Lambda^k h|ker B), shifted by twice the age.
    """
    group = model.group(cap=cap)
    n2 = model.dim
    ints = [_integer_matrix_of(e, model.n) for e in group.elements]
    table = CohomologyTable(model=f"torus quotient T^{n2}/G, |G| = {group.order}")
    component_cap = TORUS_COMPONENT_CAP if cap is None else cap
    for cls in group.conjugacy_classes():
        rep = cls.representative
        a = ints[rep]
        b = snf.mat_sub(a, snf.mat_identity(n2))
        diag, p, _ = snf.smith_normal_form(b)
        factors = [d for d in diag if d]
        ncomp = math.prod(factors)
        if ncomp > component_cap:
            raise EnumerationCapExceeded(
                f"fixed locus has {ncomp} components, over the cap {component_cap}"
            )
        kernel, free_cols = snf.rational_kernel(b, with_free_columns=True)
        r = len(kernel)
        p_inv = snf.integer_inverse(p)
        centralizer, csize = group.centralizer((rep,))
        torsion = [(i, d) for i, d in enumerate(diag) if d]
        free_rows = [i for i in range(n2) if i >= len(diag) or diag[i] == 0]
        sums = [Fraction(0)] * (r + 1)
        for h_idx in centralizer:
            h = ints[h_idx]
            hp = snf.mat_mul(snf.mat_mul(p, h), p_inv)
            fixed = _count_fixed_components(hp, torsion, free_rows, n2)
            elem = _char_poly_elementary(_restrict_to_kernel(h, kernel, free_cols))
            for k in range(r + 1):
                sums[k] += fixed * elem[k]
        iota = degree_shift(group, rep)
        label = f"(g{rep})"
        for k in range(r + 1):
            val = sums[k] / csize
            if val.denominator != 1 or val < 0:
                raise InternalInconsistency(f"sector dimension {val} is not a nonnegative integer")
            dim = int(val)
            if dim:
                table.add(2 * iota + k, dim, sector=label)
        table.sectors.setdefault(label, {})
        table.meta.setdefault("sector_iota", {})[label] = format_degree(iota)
        table.meta.setdefault("sector_components", {})[label] = ncomp
    return table


def _count_fixed_components(hp, torsion, free_rows, n2):
    """Fixed points of hp on the torsion part of Z^2n / D Z^2n."""
    count = 0
    for combo in iter_product(*[range(d) for _, d in torsion]):
        vec = [0] * n2
        for (i, _), v in zip(torsion, combo):
            vec[i] = v
        image = snf.mat_vec(hp, vec)
        if any(image[i] - vec[i] for i in free_rows):
            continue
        if any((image[i] - vec[i]) % d for i, d in torsion):
            continue
        count += 1
    return count


def catalog_bv(r: int, a: int, delta: int) -> CohomologyTable:
    """Hodge numbers of the involution threefold family, from its Nikulin
    triple (r, a, delta):

        h^{1,1} = 1 + r + 4(k+1),  h^{2,1} = 1 + (20 - r) + 4g,
        g = (22 - r - a)/2,        k = (r - a)/2.
    """
    if delta not in (0, 1):
        raise InvalidNikulinTriple(f"delta must be 0 or 1, got {delta}")
    if a < 0 or r < 0:
        raise InvalidNikulinTriple("r and a must be nonnegative")
    if (r - a) % 2 or r - a < 0:
        raise InvalidNikulinTriple(f"r - a = {r - a} must be even and nonnegative")
    if (22 - r - a) % 2 or 22 - r - a < 0:
        raise InvalidNikulinTriple(f"22 - r - a = {22 - r - a} must be even and nonnegative")
    if (r, a, delta) in ((10, 10, 0), (10, 8, 0)):
        raise InvalidNikulinTriple(f"triple {(r, a, delta)} is outside this closed-form family")
    g = (22 - r - a) // 2
    k = (r - a) // 2
    table = CohomologyTable(model=f"involution threefold (r,a,delta)=({r},{a},{delta})")
    table.entries[(Fraction(1), Fraction(0))] = 0
    table.entries[(Fraction(2), Fraction(0))] = 0
    table.entries[(Fraction(3), Fraction(0))] = 1
    table.entries[(Fraction(1), Fraction(1))] = 1 + r + 4 * (k + 1)
    table.entries[(Fraction(2), Fraction(1))] = 1 + (20 - r) + 4 * g
    table.meta["g"] = g
    table.meta["k"] = k
    return table


def catalog_wp(d1: int, d2: int) -> CohomologyTable:
    """Orbifold Betti degrees of the weighted projective line P(d1, d2):
    degree 0 and 2, plus 2j/d1 and 2i/d2 from the two singular points,
    each of dimension 1.
    """
    if d1 < 1 or d2 < 1:
        raise NotCoprime("weights must be positive")
    if math.gcd(d1, d2) != 1:
        raise NotCoprime(f"weights ({d1}, {d2}) are not coprime")
    table = CohomologyTable(model=f"weighted projective line P({d1},{d2})")
    table.add(Fraction(0), 1, sector="(1)")
    table.add(Fraction(2), 1, sector="(1)")
    for j in range(1, d1):
        table.add(Fraction(2 * j, d1), 1, sector="(x)")
    for i in range(1, d2):
        table.add(Fraction(2 * i, d2), 1, sector="(y)")
    return table
