from fractions import Fraction

import pytest

from toricmorse.linalg.matrix import (
    determinant,
    inverse,
    int_inverse,
    int_matrix,
    is_unimodular,
    mat_vec,
    nullspace,
    rank,
    rref,
    solve,
    to_rows,
)


def test_int_matrix():
    M = int_matrix([[1, 2], [3, 4]])
    assert M.shape == (2, 2)
    assert to_rows(M) == ((1, 2), (3, 4))
    assert int_matrix([], 3).shape == (0, 3)

    with pytest.raises(ValueError, match="same length"):
        int_matrix([[1, 2], [3]])
    with pytest.raises(ValueError, match="not an integer"):
        int_matrix([[Fraction(1, 2)]])


def test_rref_and_rank():
    R, pivots = rref([[2, 4], [1, 2]])
    assert pivots == (0,)
    assert to_rows(R) == ((1, 2),)

    assert rank([[1, 0, 1], [0, 1, 1], [1, 1, 2]]) == 2
    assert rank([], 2) == 0


def test_nullspace():
    basis = nullspace([[1, 1, 0]], 3)
    assert basis == ((-1, 1, 0), (0, 0, 1))
    for vector in basis:
        assert mat_vec([[1, 1, 0]], vector) == (0,)


def test_solve():
    assert solve([[1, 1], [1, -1]], [2, 0], 2) == (1, 1)
    assert solve([[2, 0]], [1], 2) == (Fraction(1, 2), 0)
    assert solve([[1, 1], [1, 1]], [0, 1], 2) is None
    assert solve([], [], 2) == (0, 0)


def test_determinants_and_inverses():
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[1, 2], [2, 4]]) == 0

    assert is_unimodular([[2, 1], [1, 1]])
    assert not is_unimodular([[2, 0], [0, 1]])

    int_inv = int_inverse(int_matrix([[2, 1], [1, 1]]))
    assert to_rows(int_inv) == ((1, -1), (-1, 2))
    with pytest.raises(ValueError, match="not unimodular"):
        int_inverse(int_matrix([[2, 0], [0, 1]]))
    with pytest.raises(ValueError, match="singular"):
        inverse([[1, 2], [2, 4]])


def test_results_are_exact_fractions():
    R, _ = rref([[3, 1], [1, 2]])
    assert to_rows(R) == ((1, 0), (0, 1))
    assert all(isinstance(x, Fraction) for x in R.flat)

    x = solve([[3, 1], [1, 2]], [1, 0], 2)
    assert x == (Fraction(2, 5), Fraction(-1, 5))
    assert all(isinstance(v, Fraction) for v in x)

    assert determinant([[Fraction(1, 2), 1], [1, 4]]) == 1
    assert isinstance(determinant([[2, 1], [1, 1]]), Fraction)

    inv = inverse([[2, 0], [0, 3]])
    assert to_rows(inv) == ((Fraction(1, 2), 0), (0, Fraction(1, 3)))

    for vector in nullspace([[2, 4, 6]], 3):
        assert all(isinstance(v, Fraction) for v in vector)
        assert mat_vec([[2, 4, 6]], vector) == (0,)


def test_degenerate_shapes():
    assert rref([], 3)[1] == ()
    assert nullspace([], 2) == ((1, 0), (0, 1))
    assert nullspace([[0, 0]], 2) == ((1, 0), (0, 1))
    assert solve([[0, 0]], [1], 2) is None
    assert solve([[0, 0]], [0], 2) == (0, 0)
    assert determinant([]) == 1
