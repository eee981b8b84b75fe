from fractions import Fraction

import pytest

from orbcoh.errors import NotSL, PairingUndefined
from orbcoh.ring import (
    center_oracle,
    oracle_match,
    pairing_determinant,
    pairing_matrix,
    ring_linear,
    ring_point,
    ring_wp,
    verify_ring,
)
from orbcoh.sectors import sector_table


def basis_position(ring, group, predicate):
    """Position of the unique basis class whose representative satisfies predicate."""
    matches = [
        i
        for i, label in enumerate(ring.basis)
        if predicate(int(label[len("x_(g"):-1]))
    ]
    assert len(matches) == 1
    return matches[0]


def test_ring_point_trivial_group():
    from orbcoh.cyclo import CycMatrix, get_field
    from orbcoh.group import generate

    field = get_field(1)
    g = generate(field, 1, [CycMatrix.identity(field, 1)])
    ring = ring_point(g)
    assert ring.basis == ["x_(g0)"]
    assert ring.product(0, 0) == {0: Fraction(1)}


def test_ring_point_s3_transposition_square(s3):
    ring = ring_point(s3)
    tr = basis_position(ring, s3, lambda rep: s3.order_of[rep] == 2)
    unit = ring.unit_index
    three_cycle = basis_position(ring, s3, lambda rep: s3.order_of[rep] == 3)
    assert ring.product(tr, tr) == {unit: Fraction(3), three_cycle: Fraction(3)}


def test_center_oracle_s3_class_sums(s3):
    # exhaustive transposition products: 3 land on e, 6 on the 3-cycles
    oracle = center_oracle(s3)
    tr = basis_position(oracle, s3, lambda rep: s3.order_of[rep] == 2)
    unit = oracle.unit_index
    cyc = basis_position(oracle, s3, lambda rep: s3.order_of[rep] == 3)
    assert oracle.product(tr, tr) == {unit: Fraction(3), cyc: Fraction(3)}


def test_center_oracle_abelian(z3_scalar):
    oracle = center_oracle(z3_scalar)
    for (i, j), terms in oracle.structure.items():
        assert list(terms.values()) == [Fraction(1)]


def test_center_oracle_q8_i_times_j(q8):
    oracle = center_oracle(q8)
    # class sums of the three order-4 classes multiply pairwise to 2x the third
    order4 = [
        i
        for i, label in enumerate(oracle.basis)
        if q8.order_of[int(label[len("x_(g"):-1])] == 4
    ]
    assert len(order4) == 3
    a, b, c = order4
    assert oracle.product(a, b) == {c: Fraction(2)}


def test_oracle_match_all_catalog(all_catalog_groups):
    for name, g in all_catalog_groups:
        if g.order <= 24:
            assert oracle_match(g), name


def test_ring_point_pairing_s3(s3):
    ring = ring_point(s3)
    pm = pairing_matrix(ring)
    # classes in S3 are self-inverse: diagonal 1/|C(g)|
    diag = sorted(pm[i][i] for i in range(3))
    assert diag == [Fraction(1, 6), Fraction(1, 3), Fraction(1, 2)]
    for i in range(3):
        for j in range(3):
            if i != j:
                assert pm[i][j] == 0
    assert pairing_determinant(ring) != 0


def test_ring_point_pairing_nondegenerate(all_catalog_groups):
    for _, g in all_catalog_groups:
        assert pairing_determinant(ring_point(g)) != 0


def test_ring_linear_z3_scalar(z3_scalar):
    ring = ring_linear(z3_scalar)
    g1 = next(i for i, d in enumerate(ring.degrees) if d == 2)
    g2 = next(i for i, d in enumerate(ring.degrees) if d == 4)
    assert ring.product(g1, g1) == {g2: Fraction(1)}
    assert ring.product(g1, g2) == {}
    assert ring.product(g2, g2) == {}


def test_ring_linear_kummer_involution(z2):
    ring = ring_linear(z2)
    twisted = next(i for i, d in enumerate(ring.degrees) if d == 2)
    assert ring.product(twisted, twisted) == {}


def test_ring_linear_unit_row(q8):
    ring = ring_linear(q8)
    u = ring.unit_index
    for i in range(len(ring.basis)):
        assert ring.product(u, i) == {i: Fraction(1)}
        assert ring.product(i, u) == {i: Fraction(1)}


def test_ring_linear_requires_sl(s3):
    with pytest.raises(NotSL):
        ring_linear(s3)


def test_ring_linear_no_pairing(q8):
    ring = ring_linear(q8)
    with pytest.raises(PairingUndefined):
        pairing_matrix(ring)


def test_ring_linear_transverse_pairs_have_trivial_obstruction(q8, z3_scalar, bd12):
    from orbcoh.sectors import obstruction_rank

    for g in (q8, z3_scalar, bd12):
        ring = ring_linear(g)
        classes = g.conjugacy_classes()
        for tc in g.tuple_classes(2, product_one=False):
            h1, h2 = tc.representative
            from orbcoh.sectors import degree_shift, fixed_dim

            additive = degree_shift(g, h1) + degree_shift(g, h2) == degree_shift(g, tc.product_index)
            transverse = fixed_dim(g, (h1, h2)) == fixed_dim(g, (tc.product_index,))
            if additive and transverse:
                triple = (h1, h2, g.inv[tc.product_index])
                assert obstruction_rank(g, triple) == 0


def test_ring_wp_relations():
    ring = ring_wp(2, 3)
    assert ring.basis == ["1", "a^1", "b^1", "b^2", "t"]
    a = 1
    b1, b2 = 2, 3
    t = 4
    assert ring.product(a, a) == {t: Fraction(1)}       # alpha^2 = top
    assert ring.product(b1, b2) == {t: Fraction(1)}     # beta^3 = top
    assert ring.product(a, b1) == {}                    # cross products vanish
    assert ring.product(a, t) == {}                     # alpha^(d1+1) = 0
    assert ring.product(t, t) == {}
    assert ring.pairing[b1][b2] == 1
    assert ring.pairing[b1][b1] == 0
    assert ring.pairing[0][t] == 1


def test_ring_wp_d1_one():
    ring = ring_wp(1, 4)
    assert ring.basis == ["1", "b^1", "b^2", "b^3", "t"]
    b2 = 2
    b1, b3 = 1, 3
    assert ring.product(b2, b2) == {4: Fraction(1)}
    assert ring.product(b1, b3) == {4: Fraction(1)}
    assert ring.product(b3, b3) == {}  # beta^6 = 0 past the top
    assert ring.product(b2, b3) == {}  # beta^5 = 0


def test_ring_wp_trivial():
    ring = ring_wp(1, 1)
    assert ring.basis == ["1", "t"]
    assert ring.product(1, 1) == {}
    assert ring.pairing[0][1] == 1


def test_ring_wp_pairing_pattern():
    for d1, d2 in ((1, 2), (1, 4), (2, 3), (3, 5)):
        ring = ring_wp(d1, d2)
        pm = pairing_matrix(ring)
        det = pairing_determinant(ring)
        assert det != 0
        n = len(ring.basis)
        for i in range(n):
            for j in range(n):
                expected = Fraction(1) if ring.degrees[i] + ring.degrees[j] == 2 else Fraction(0)
                assert pm[i][j] == expected


def test_verify_ring_passes_everywhere(s4, q8, z3_scalar):
    assert verify_ring(ring_point(s4)).ok
    assert verify_ring(ring_linear(q8)).ok
    assert verify_ring(ring_linear(z3_scalar)).ok
    assert verify_ring(ring_wp(2, 3)).ok
    assert verify_ring(ring_wp(3, 5)).ok


def test_verify_ring_fault_injection(s4):
    ring = ring_point(s4)
    (i, j), terms = next(
        ((key, t) for key, t in sorted(ring.structure.items()) if key[0] != ring.unit_index and key[1] != ring.unit_index)
    )
    k = next(iter(sorted(terms)))
    ring.structure[(i, j)][k] += 1
    report = verify_ring(ring)
    assert not report.ok
    failing = {c.name for c in report.failures()}
    assert "associative" in failing or "commutative" in failing
    named = next(c.counterexample for c in report.failures() if c.counterexample)
    assert "x_(" in named


def test_verify_ring_catches_degree_violation():
    ring = ring_wp(2, 3)
    ring.add_term(1, 1, 0, Fraction(1))  # a * a -> unit: wrong degree
    report = verify_ring(ring)
    assert not report.ok
    assert any(c.name == "graded" and not c.ok for c in report.checks)


def test_point_ring_matches_sector_order(s4):
    ring = ring_point(s4)
    labels = [f"x_{s.label}" for s in sector_table(s4)]
    assert ring.basis == labels
