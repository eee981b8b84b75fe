"""Cup-product rings with exact rational structure constants.

Three constructions: point quotients (isomorphic to the center of the group
algebra, with the class-sum convolution kept as an independent oracle),
linear quotients of SL subgroups (terms filtered by age additivity and
transversality of fixed subspaces), and the closed-form weighted projective
line.  A verifier checks the ring axioms on every basis triple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotCoprime, NotSL, PairingUndefined
from .group import FiniteMatrixGroup
from .models import format_degree
from .sectors import degree_shift, fixed_dim, sector_table
from .snf import rational_det

import math


@dataclass
class GradedRing:
    """Finite graded commutative ring in a fixed basis.

    structure maps (i, j) to a sparse {k: coefficient} dict; absent pairs
    multiply to zero.  pairing/integral are optional and exact.
    """

    model: str
    basis: list[str]
    degrees: list[Fraction]
    unit_index: int
    structure: dict = field(default_factory=dict)
    pairing: list | None = None
    integral: list | None = None

    def add_term(self, i: int, j: int, k: int, coeff: Fraction):
        if not coeff:
            return
        terms = self.structure.setdefault((i, j), {})
        terms[k] = terms.get(k, Fraction(0)) + coeff
        if not terms[k]:
            del terms[k]
            if not terms:
                del self.structure[(i, j)]

    def product(self, i: int, j: int) -> dict:
        return dict(self.structure.get((i, j), {}))

    def product_vector(self, vec: dict, j: int) -> dict:
        out: dict = {}
        for i, c in vec.items():
            for k, d in self.structure.get((i, j), {}).items():
                out[k] = out.get(k, Fraction(0)) + c * d
        return {k: v for k, v in out.items() if v}

    def to_json_dict(self) -> dict:
        out = {
            "model": self.model,
            "basis": list(self.basis),
            "degrees": [format_degree(d) for d in self.degrees],
            "unit": self.unit_index,
            "structure": [
                [i, j, k, format_degree(c)]
                for (i, j) in sorted(self.structure)
                for k, c in sorted(self.structure[(i, j)].items())
            ],
        }
        if self.pairing is not None:
            out["pairing"] = [[format_degree(x) for x in row] for row in self.pairing]
        return out


def _class_basis(group: FiniteMatrixGroup):
    """Sector-sorted conjugacy classes with the class index of each element."""
    sectors = sector_table(group)
    order = [group.class_of(s.representative) for s in sectors]
    position = {cls_idx: pos for pos, cls_idx in enumerate(order)}
    return sectors, position


def ring_point(group: FiniteMatrixGroup) -> GradedRing:
    """Orbifold cohomology ring of point/G.

    x_(g1) x_(g2) = sum over pair classes (h1, h2) of
    |C(h1 h2)| / |C(h1) n C(h2)| on x_(h1 h2); the pairing is 1/|C(g)|
    against the inverse class and the integral picks 1/|G| at the unit.
    """
    sectors, position = _class_basis(group)
    size = group.order
    ring = GradedRing(
        model=f"point quotient, |G| = {size}",
        basis=[f"x_{s.label}" for s in sectors],
        degrees=[Fraction(0)] * len(sectors),
        unit_index=next(i for i, s in enumerate(sectors) if s.is_untwisted),
    )
    classes = group.conjugacy_classes()
    for tc in group.tuple_classes(2, product_one=False):
        h1, h2 = tc.representative
        i = position[group.class_of(h1)]
        j = position[group.class_of(h2)]
        prod_cls = group.class_of(tc.product_index)
        k = position[prod_cls]
        coeff = Fraction(classes[prod_cls].centralizer_order, tc.centralizer_order)
        ring.add_term(i, j, k, coeff)
    inverse_class = [group.class_of(group.inv[s.representative]) for s in sectors]
    ring.pairing = [
        [
            Fraction(1, sectors[i].centralizer_order) if inverse_class[i] == group.class_of(sectors[j].representative) else Fraction(0)
            for j in range(len(sectors))
        ]
        for i in range(len(sectors))
    ]
    ring.integral = [
        Fraction(1, size) if i == ring.unit_index else Fraction(0) for i in range(len(sectors))
    ]
    return ring


def center_oracle(group: FiniteMatrixGroup) -> GradedRing:
    """Structure constants of the center of the group algebra, by exhaustive
    convolution of class sums.  Independent oracle for ring_point.
    """
    sectors, position = _class_basis(group)
    ring = GradedRing(
        model=f"group algebra center, |G| = {group.order}",
        basis=[f"x_{s.label}" for s in sectors],
        degrees=[Fraction(0)] * len(sectors),
        unit_index=next(i for i, s in enumerate(sectors) if s.is_untwisted),
    )
    classes = group.conjugacy_classes()
    for ci in classes:
        i = position[group.class_of(ci.representative)]
        for cj in classes:
            j = position[group.class_of(cj.representative)]
            tally: dict[int, int] = {}
            for a in ci.members:
                for b in cj.members:
                    k = group.class_of(group.mul[a][b])
                    tally[k] = tally.get(k, 0) + 1
            for cls_idx, count in tally.items():
                coeff = Fraction(count, classes[cls_idx].size)
                assert coeff.denominator == 1
                ring.add_term(i, j, position[cls_idx], coeff)
    return ring


def ring_linear(group: FiniteMatrixGroup) -> GradedRing:
    """Orbifold cohomology ring of C^n/G for G in SL(n).

    A pair class (h1, h2) contributes |C(h1 h2)| / |C(h1) n C(h2)| on
    x_(h1 h2) iff ages add up and the pair is transverse:
    dim(V^h1 n V^h2) = dim V^(h1 h2).  No pairing (noncompact model).
    """
    if not group.is_sl:
        raise NotSL("the linear-quotient ring requires all generators in SL(n)")
    sectors, position = _class_basis(group)
    ring = GradedRing(
        model=f"linear quotient C^{group.n}/G, |G| = {group.order}",
        basis=[f"x_{s.label}" for s in sectors],
        degrees=[2 * s.iota for s in sectors],
        unit_index=next(i for i, s in enumerate(sectors) if s.is_untwisted),
    )
    classes = group.conjugacy_classes()
    for tc in group.tuple_classes(2, product_one=False):
        h1, h2 = tc.representative
        prod = tc.product_index
        if degree_shift(group, h1) + degree_shift(group, h2) != degree_shift(group, prod):
            continue
        if fixed_dim(group, (h1, h2)) != fixed_dim(group, (prod,)):
            continue
        prod_cls = group.class_of(prod)
        coeff = Fraction(classes[prod_cls].centralizer_order, tc.centralizer_order)
        i = position[group.class_of(h1)]
        j = position[group.class_of(h2)]
        ring.add_term(i, j, position[prod_cls], coeff)
    return ring


def ring_wp(d1: int, d2: int) -> GradedRing:
    """Cohomology ring of the weighted projective line P(d1, d2).

    Basis 1, a^j, b^i, t with deg a = 2/d1, deg b = 2/d2, deg t = 2 and
    relations a^d1 = b^d2 = t, a^(d1+1) = b^(d2+1) = 0; cross products
    a^j b^i vanish for degree reasons (coprimality).  Pairing pairs
    complementary powers, and <1, t> = 1.
    """
    if d1 < 1 or d2 < 1:
        raise NotCoprime("weights must be positive")
    if math.gcd(d1, d2) != 1:
        raise NotCoprime(f"weights ({d1}, {d2}) are not coprime")
    basis = ["1"]
    degrees = [Fraction(0)]
    a_index = {}
    b_index = {}
    for j in range(1, d1):
        a_index[j] = len(basis)
        basis.append(f"a^{j}")
        degrees.append(Fraction(2 * j, d1))
    for i in range(1, d2):
        b_index[i] = len(basis)
        basis.append(f"b^{i}")
        degrees.append(Fraction(2 * i, d2))
    t_index = len(basis)
    basis.append("t")
    degrees.append(Fraction(2))
    size = len(basis)
    ring = GradedRing(
        model=f"weighted projective line P({d1},{d2})",
        basis=basis,
        degrees=degrees,
        unit_index=0,
    )
    one = Fraction(1)
    for i in range(size):
        ring.add_term(0, i, i, one)
        if i:
            ring.add_term(i, 0, i, one)

    def power_target(index_map, top, p):
        # a^p for p >= 1: a basis power, t at the top, zero past it
        if p in index_map:
            return index_map[p]
        if p == top:
            return t_index
        return None

    for j1, i1 in a_index.items():
        for j2, i2 in a_index.items():
            k = power_target(a_index, d1, j1 + j2)
            if k is not None:
                ring.add_term(i1, i2, k, one)
    for j1, i1 in b_index.items():
        for j2, i2 in b_index.items():
            k = power_target(b_index, d2, j1 + j2)
            if k is not None:
                ring.add_term(i1, i2, k, one)
    # a^j * b^i = 0 and anything * t = 0 beyond the unit row: omitted terms

    pairing = [[Fraction(0)] * size for _ in range(size)]
    pairing[0][t_index] = one
    pairing[t_index][0] = one
    for j1, i1 in a_index.items():
        j2 = d1 - j1
        if j2 in a_index:
            pairing[i1][a_index[j2]] = one
    for i1, bi1 in b_index.items():
        i2 = d2 - i1
        if i2 in b_index:
            pairing[bi1][b_index[i2]] = one
    ring.pairing = pairing
    ring.integral = [one if i == t_index else Fraction(0) for i in range(size)]
    return ring


def pairing_matrix(ring: GradedRing):
    """The ring's pairing matrix; defined for compact models only."""
    if ring.pairing is None:
        raise PairingUndefined(f"no pairing for model: {ring.model}")
    return [row[:] for row in ring.pairing]


def pairing_determinant(ring: GradedRing) -> Fraction:
    return rational_det(pairing_matrix(ring))


@dataclass
class RingCheck:
    name: str
    ok: bool
    counterexample: str | None = None


@dataclass
class RingReport:
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def lines(self):
        out = []
        for c in self.checks:
            line = f"{'PASS' if c.ok else 'FAIL'} {c.name}"
            if c.counterexample:
                line += f": {c.counterexample}"
            out.append(line)
        return out


def verify_ring(ring: GradedRing) -> RingReport:
    """Check unit, associativity, graded additivity, commutativity, and
    (when defined) pairing compatibility, exactly, on all basis tuples.
    """
    n = len(ring.basis)
    unit = ring.unit_index
    checks = []

    bad = None
    for i in range(n):
        if ring.product(unit, i) != {i: Fraction(1)} or ring.product(i, unit) != {i: Fraction(1)}:
            bad = f"unit fails on {ring.basis[i]}"
            break
    checks.append(RingCheck("unit", bad is None, bad))

    bad = None
    for (i, j), terms in sorted(ring.structure.items()):
        for k in sorted(terms):
            if ring.degrees[k] != ring.degrees[i] + ring.degrees[j]:
                bad = (
                    f"{ring.basis[i]} * {ring.basis[j]} -> {ring.basis[k]} has degree "
                    f"{format_degree(ring.degrees[k])} != "
                    f"{format_degree(ring.degrees[i])} + {format_degree(ring.degrees[j])}"
                )
                break
        if bad:
            break
    checks.append(RingCheck("graded", bad is None, bad))

    bad = None
    for i in range(n):
        for j in range(i, n):
            if ring.product(i, j) != ring.product(j, i):
                bad = f"{ring.basis[i]} * {ring.basis[j]} != {ring.basis[j]} * {ring.basis[i]}"
                break
        if bad:
            break
    checks.append(RingCheck("commutative", bad is None, bad))

    bad = None
    for i in range(n):
        for j in range(n):
            left_ij = ring.product(i, j)
            for k in range(n):
                left = ring.product_vector(left_ij, k)
                right = {}
                for m, c in ring.product(j, k).items():
                    for t, d in ring.structure.get((i, m), {}).items():
                        right[t] = right.get(t, Fraction(0)) + c * d
                right = {t: v for t, v in right.items() if v}
                if left != right:
                    bad = (
                        f"({ring.basis[i]} * {ring.basis[j]}) * {ring.basis[k]} != "
                        f"{ring.basis[i]} * ({ring.basis[j]} * {ring.basis[k]})"
                    )
                    break
            if bad:
                break
        if bad:
            break
    checks.append(RingCheck("associative", bad is None, bad))

    if ring.pairing is not None and ring.integral is not None:
        bad = None
        for i in range(n):
            for j in range(n):
                integral = sum(
                    (c * ring.integral[k] for k, c in ring.product(i, j).items()),
                    Fraction(0),
                )
                if integral != ring.pairing[i][j]:
                    bad = (
                        f"integral of {ring.basis[i]} * {ring.basis[j]} is "
                        f"{format_degree(integral)}, pairing says {format_degree(ring.pairing[i][j])}"
                    )
                    break
            if bad:
                break
        checks.append(RingCheck("pairing", bad is None, bad))
    return RingReport(checks)


def oracle_match(group: FiniteMatrixGroup) -> bool:
    """Exact equality of ring_point and center_oracle structure constants."""
    a = ring_point(group)
    b = center_oracle(group)
    return a.basis == b.basis and a.structure == b.structure
