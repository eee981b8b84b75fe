import math
from itertools import product as iproduct

import pytest

from conftest import diag, perm_matrix
from orbcoh.cyclo import CycMatrix, get_field
from orbcoh.errors import ClosureCapExceeded, EnumerationCapExceeded, NonInvertibleGenerator
from orbcoh.group import generate


def brute_closure(generators):
    """Independent closure oracle: saturate a list under products."""
    elems = list(generators)
    ident = CycMatrix.identity(generators[0].field, generators[0].rows)
    if ident not in elems:
        elems.append(ident)
    while True:
        new = []
        for a in elems:
            for b in elems:
                p = a * b
                if p not in elems and p not in new:
                    new.append(p)
        if not new:
            return elems
        elems.extend(new)


def test_order_two_group():
    field = get_field(1)
    neg = CycMatrix.identity(field, 2) * -1
    g = generate(field, 2, [neg])
    assert g.order == 2
    assert g.elements[0].is_identity()


def test_q8_closure(q8):
    assert q8.order == 8
    assert q8.exponent == 4
    assert q8.is_sl
    field = get_field(4)
    a = diag(field, field.zeta(), -field.zeta())
    b = CycMatrix.from_rows(field, [[field.zero(), field.one()], [-field.one(), field.zero()]])
    assert len(brute_closure([a, b])) == 8


def test_s3_closure(s3):
    assert s3.order == 6
    assert not s3.is_sl
    assert len(brute_closure([perm_matrix([1, 0, 2]), perm_matrix([1, 2, 0])])) == 6


def test_mul_table_matches_matrix_products(s3):
    for i in range(s3.order):
        for j in range(s3.order):
            assert s3.elements[s3.mul[i][j]] == s3.elements[i] * s3.elements[j]


def test_inverse_and_order_tables(q8):
    for i in range(q8.order):
        assert q8.mul[i][q8.inv[i]] == 0
        assert q8.mul[q8.inv[i]][i] == 0
        k, o = i, 1
        while k != 0:
            k = q8.mul[k][i]
            o += 1
        assert o == q8.order_of[i] or i == 0
        assert q8.order % q8.order_of[i] == 0


def test_generate_rejects_singular():
    field = get_field(1)
    zero = CycMatrix.identity(field, 2) * 0
    with pytest.raises(NonInvertibleGenerator):
        generate(field, 2, [zero])


def test_generate_cap():
    field = get_field(1)
    with pytest.raises(ClosureCapExceeded):
        generate(field, 3, [perm_matrix([1, 2, 0]), perm_matrix([1, 0, 2])], cap=4)


def test_conjugacy_classes_cyclic():
    field = get_field(4)
    g = generate(field, 1, [CycMatrix.from_rows(field, [[field.zeta()]])])
    classes = g.conjugacy_classes()
    assert len(classes) == 4
    assert all(c.size == 1 for c in classes)


def test_conjugacy_classes_s3(s3):
    sizes = sorted(c.size for c in s3.conjugacy_classes())
    assert sizes == [1, 2, 3]


def test_conjugacy_classes_q8(q8):
    sizes = sorted(c.size for c in q8.conjugacy_classes())
    assert sizes == [1, 1, 2, 2, 2]


def test_class_equation_and_orbit_stabilizer(all_catalog_groups):
    for _, g in all_catalog_groups:
        classes = g.conjugacy_classes()
        assert sum(c.size for c in classes) == g.order
        for c in classes:
            assert c.size * c.centralizer_order == g.order
            members, order = g.centralizer((c.representative,))
            assert order == c.centralizer_order
            assert 0 in members


def test_inverse_involution_on_classes(all_catalog_groups):
    for _, g in all_catalog_groups:
        classes = g.conjugacy_classes()
        perm = []
        for c in classes:
            image = g.class_of(g.inv[c.representative])
            perm.append(image)
            # well defined on the whole class
            assert all(g.class_of(g.inv[m]) == image for m in c.members)
        assert sorted(perm) == list(range(len(classes)))
        assert all(perm[perm[i]] == i for i in range(len(perm)))


def test_centralizer_examples(s3):
    transposition = next(i for i in range(6) if s3.order_of[i] == 2)
    other = next(
        i
        for i in range(6)
        if s3.order_of[i] == 2 and i != transposition
    )
    _, order = s3.centralizer((transposition,))
    assert order == 2
    _, order = s3.centralizer((transposition, other))
    assert order == 1
    members, order = s3.centralizer((0,))
    assert order == 6 and members == list(range(6))


def test_tuple_classes_z2_product_one(z2):
    classes = z2.tuple_classes(3, product_one=True)
    reps = {c.representative for c in classes}
    assert reps == {(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)}
    assert all(c.size == 1 for c in classes)


def test_tuple_classes_abelian_count():
    field = get_field(4)
    z4 = generate(field, 1, [CycMatrix.from_rows(field, [[field.zeta()]])])
    classes = z4.tuple_classes(3, product_one=True)
    assert len(classes) == 16
    assert all(c.size == 1 for c in classes)


def test_tuple_classes_s3_transposition_pairs(s3):
    transpositions = [i for i in range(6) if s3.order_of[i] == 2]
    # brute-force oracle over the 9 transposition pairs
    orbits = {}
    for pair in iproduct(transpositions, repeat=2):
        canon = min(
            tuple(s3.conjugate(x, s) for x in pair) for s in range(6)
        )
        orbits.setdefault(canon, set()).add(pair)
    assert len(orbits) == 2
    classes = [
        c
        for c in s3.tuple_classes(2, product_one=False)
        if all(x in transpositions for x in c.representative)
    ]
    assert len(classes) == 2
    by_kind = {c.size: c for c in classes}
    assert by_kind[3].centralizer_order == 2   # equal pair
    assert by_kind[6].centralizer_order == 1   # distinct pair


def test_tuple_class_invariants(s3, q8):
    for g in (s3, q8):
        for k, product_one in ((2, False), (3, True)):
            for tc in g.tuple_classes(k, product_one):
                assert tc.size * tc.centralizer_order == g.order
                assert tc.representative == min(tc.members)
                product_class = g.class_of(tc.product_index)
                for member in tc.members:
                    assert g.class_of(g.product(member)) == product_class
                    if product_one:
                        assert g.product(member) == 0
                _, order = g.centralizer(tc.representative)
                assert order == tc.centralizer_order


def test_tuple_cap(s4):
    with pytest.raises(EnumerationCapExceeded):
        s4.tuple_classes(3, product_one=True, cap=1000)


def test_determinism_same_input_twice():
    field = get_field(4)
    a = diag(field, field.zeta(), -field.zeta())
    b = CycMatrix.from_rows(field, [[field.zero(), field.one()], [-field.one(), field.zero()]])
    g1 = generate(field, 2, [a, b])
    g2 = generate(field, 2, [a, b])
    assert g1.elements == g2.elements
    assert g1.mul == g2.mul
    reps1 = [c.representative for c in g1.conjugacy_classes()]
    reps2 = [c.representative for c in g2.conjugacy_classes()]
    assert reps1 == reps2


def test_exponent_is_lcm(all_catalog_groups):
    for _, g in all_catalog_groups:
        assert g.exponent == math.lcm(*g.order_of)
