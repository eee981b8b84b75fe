import random
from fractions import Fraction

from orbcoh.snf import (
    integer_inverse,
    mat_identity,
    mat_mul,
    rational_det,
    rational_kernel,
    smith_normal_form,
)


def test_smith_normal_form_random():
    rng = random.Random(20240811)
    for _ in range(200):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 6)
        mat = [[rng.randint(-9, 9) for _ in range(ncols)] for _ in range(nrows)]
        diag, p, q = smith_normal_form(mat)
        product = mat_mul(mat_mul(p, mat), q)
        for i in range(nrows):
            for j in range(ncols):
                expected = diag[i] if i == j and i < len(diag) else 0
                assert product[i][j] == expected
        assert abs(rational_det(p)) == 1
        assert abs(rational_det(q)) == 1
        nonzero = [d for d in diag if d]
        assert all(d > 0 for d in nonzero)
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0
        assert diag[len(nonzero):] == [0] * (len(diag) - len(nonzero))


def test_smith_known_forms():
    diag, _, _ = smith_normal_form([[-2, 0], [0, -2]])
    assert diag == [2, 2]
    diag, _, _ = smith_normal_form([[-1, -1], [1, -1]])
    assert diag == [1, 2]
    diag, _, _ = smith_normal_form([[2, 4], [4, 8]])
    assert diag == [2, 0]
    diag, _, _ = smith_normal_form([[0, 0], [0, 0]])
    assert diag == [0, 0]


def test_rational_kernel_unit_coordinates():
    basis, free = rational_kernel([[1, 2, 3], [2, 4, 6]], with_free_columns=True)
    assert len(basis) == 2 and free == [1, 2]
    for pos, v in zip(free, basis):
        assert v[pos] == 1
        for other, w in zip(free, basis):
            if w is not v:
                assert v[other] == 0


def test_integer_inverse_round_trip():
    m = [[2, 1], [1, 1]]
    inv = integer_inverse(m)
    assert mat_mul(m, inv) == mat_identity(2)


def test_rational_det():
    assert rational_det([[2, 0], [0, 3]]) == 6
    assert rational_det([[1, 2], [2, 4]]) == 0
    assert rational_det([[Fraction(1, 2)]]) == Fraction(1, 2)
