from fractions import Fraction

import pytest

from orbcoh import catalog
from orbcoh.cyclo import CycMatrix, get_field
from orbcoh.group import generate


def perm_matrix(images):
    """Permutation matrix over Q sending basis vector r to position images[r]."""
    field = get_field(1)
    n = len(images)
    rows = [
        [field.one() if images[r] == c else field.zero() for c in range(n)]
        for r in range(n)
    ]
    return CycMatrix.from_rows(field, rows)


def diag(field, *entries):
    n = len(entries)
    return CycMatrix.from_rows(
        field,
        [[entries[i] if i == j else field.zero() for j in range(n)] for i in range(n)],
    )


@pytest.fixture(scope="session")
def s3():
    return catalog.load_group("s3")


@pytest.fixture(scope="session")
def s4():
    return catalog.load_group("s4")


@pytest.fixture(scope="session")
def q8():
    return catalog.load_group("q8")


@pytest.fixture(scope="session")
def bd12():
    return catalog.load_group("bd12")


@pytest.fixture(scope="session")
def z2():
    return catalog.load_group("z2")


@pytest.fixture(scope="session")
def z3_scalar():
    return catalog.load_group("z3sl3")


@pytest.fixture(scope="session")
def z4_diag():
    """Z4 generated by diag(i, 1): a non-SL cyclic group for iota tests."""
    field = get_field(4)
    return generate(field, 2, [diag(field, field.zeta(), field.one())])


@pytest.fixture(scope="session")
def all_catalog_groups():
    return catalog.groups()
