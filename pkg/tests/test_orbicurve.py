import random
from fractions import Fraction
from itertools import product as iproduct

import pytest

from orbcoh.errors import CongruenceViolation, ExponentRange, ProductNotIdentity
from orbcoh.orbicurve import (
    OrbiBundleData,
    classify_validate,
    euler_characteristic,
    glue_index_check,
    sector_bundle_data,
)
from orbcoh.sectors import fixed_dim, obstruction_rank


def test_classify_examples():
    d = OrbiBundleData(genus=0, rank=1, marks=((2, (1,)),), chern=Fraction(1, 2))
    assert classify_validate(d) == {"valid": True, "desing_chern": 0}

    d = OrbiBundleData(genus=0, rank=1, marks=(), chern=Fraction(3))
    assert classify_validate(d) == {"valid": True, "desing_chern": 3}

    with pytest.raises(CongruenceViolation):
        classify_validate(OrbiBundleData(0, 1, ((3, (1,)),), Fraction(1, 2)))


def test_classify_exponent_range():
    with pytest.raises(ExponentRange):
        classify_validate(OrbiBundleData(0, 1, ((2, (2,)),), Fraction(0)))
    with pytest.raises(ExponentRange):
        classify_validate(OrbiBundleData(0, 1, ((1, (0,)),), Fraction(0)))
    with pytest.raises(ExponentRange):
        classify_validate(OrbiBundleData(0, 2, ((2, (1,)),), Fraction(1, 2)))


def test_classify_round_trip():
    d = OrbiBundleData(genus=2, rank=3, marks=((4, (1, 2, 3)), (2, (0, 1, 1))), chern=Fraction(5, 2))
    desing = classify_validate(d)["desing_chern"]
    assert Fraction(desing) + d.exponent_sum == d.chern


def test_euler_characteristic_examples():
    assert euler_characteristic(OrbiBundleData(0, 1, ((2, (1,)),), Fraction(1, 2))) == 1
    assert euler_characteristic(OrbiBundleData(1, 2, ((3, (1, 2)),), Fraction(1))) == 0
    for g in range(4):
        for n in (1, 2, 3):
            assert euler_characteristic(OrbiBundleData(g, n, (), Fraction(0))) == n * (1 - g)


def test_euler_characteristic_randomized_integrality():
    rng = random.Random(11)
    for _ in range(1000):
        g = rng.randint(0, 5)
        n = rng.randint(1, 4)
        marks = []
        for _ in range(rng.randint(0, 4)):
            m = rng.randint(2, 6)
            marks.append((m, tuple(rng.randint(0, m - 1) for _ in range(n))))
        data = OrbiBundleData(g, n, tuple(marks), Fraction(0))
        # synthesize a valid chern number from the congruence constraint
        data = OrbiBundleData(g, n, tuple(marks), data.exponent_sum + rng.randint(-3, 3))
        chi = euler_characteristic(data)
        assert isinstance(chi, int)
        # perturbing the congruence must be rejected
        if any(m > 2 for m, _ in marks):
            bad = OrbiBundleData(g, n, tuple(marks), data.chern + Fraction(1, 7))
            with pytest.raises(CongruenceViolation):
                classify_validate(bad)


def test_sector_bundle_examples(z2, z3_scalar):
    d = sector_bundle_data(z2, (0, 0, 0))
    assert d.marks == () and euler_characteristic(d) == 2

    d = sector_bundle_data(z2, (1, 1, 0))
    assert d.marks == ((2, (1, 1)), (2, (1, 1)))
    assert euler_characteristic(d) == 0
    assert fixed_dim(z2, (1, 1, 0)) - euler_characteristic(d) == obstruction_rank(z2, (1, 1, 0))


def test_sector_bundle_z3_line():
    from orbcoh.cyclo import CycMatrix, get_field
    from orbcoh.group import generate

    field = get_field(3)
    g = generate(field, 1, [CycMatrix.from_rows(field, [[field.zeta()]])])
    d = sector_bundle_data(g, (2, 2, 2))
    assert euler_characteristic(d) == -1
    assert obstruction_rank(g, (2, 2, 2)) == 1


def test_sector_bundle_rejects_bad_product(z2):
    with pytest.raises(ProductNotIdentity):
        sector_bundle_data(z2, (1, 0, 0))


def test_chi_matches_obstruction_rank_exhaustive(all_catalog_groups):
    for name, g in all_catalog_groups:
        if g.order > 12:
            continue
        for prefix in iproduct(range(g.order), repeat=2):
            t = prefix + (g.inv[g.product(prefix)],)
            chi = euler_characteristic(sector_bundle_data(g, t))
            assert chi == fixed_dim(g, t) - obstruction_rank(g, t), (name, t)


def test_glue_examples(z2, z3_scalar):
    rep = glue_index_check(z2, (0, 0, 0, 0))
    assert rep.ok and rep.coker_left == 0

    rep = glue_index_check(z2, (1, 1, 1, 1))
    assert rep.ok
    assert rep.coker_left == 0 + 0 + 2  # two rigid halves plus the excess

    rep = glue_index_check(z3_scalar, (1, 1, 1, 0))
    assert rep.ok


def test_glue_rejects_bad_product(z2):
    with pytest.raises(ProductNotIdentity):
        glue_index_check(z2, (1, 0, 0, 0))
    with pytest.raises(ProductNotIdentity):
        glue_index_check(z2, (1, 1, 1))


def test_glue_exhaustive_small_groups(q8, s3):
    for g in (q8, s3):
        for prefix in iproduct(range(g.order), repeat=3):
            t = prefix + (g.inv[g.product(prefix)],)
            rep = glue_index_check(g, t)
            assert rep.index_ok and rep.coker_ok, t
