from fractions import Fraction

import pytest

from charlattice import linalg


def test_invert_roundtrip():
    m = linalg.mat([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    inv = linalg.invert(m)
    assert linalg.matmul(m, inv) == linalg.identity(3)
    assert linalg.matmul(inv, m) == linalg.identity(3)


def test_invert_singular_raises():
    with pytest.raises(ValueError):
        linalg.invert(linalg.mat([[1, 2], [2, 4]]))


def test_rank():
    assert linalg.rank([linalg.vec([1, 0]), linalg.vec([0, 1])]) == 2
    assert linalg.rank([linalg.vec([1, 2]), linalg.vec([2, 4])]) == 1
    assert linalg.rank([]) == 0


def test_solve_columns_exact():
    cols = [linalg.vec([1, 0, 1]), linalg.vec([0, 1, 1])]
    coeffs = linalg.solve_columns(cols, linalg.vec([2, 3, 5]))
    assert coeffs == (Fraction(2), Fraction(3))
    assert linalg.solve_columns(cols, linalg.vec([1, 0, 0])) is None


def test_extend_to_basis():
    base = [linalg.vec([1, 1, 0])]
    full = linalg.extend_to_basis(base, 3)
    assert len(full) == 3
    assert linalg.rank(list(full)) == 3
