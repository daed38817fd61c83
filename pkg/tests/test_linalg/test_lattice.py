from fractions import Fraction

import pytest

from toricmorse.exception import LatticeChainError, ZeroCharacterError
from toricmorse.linalg.lattice import (
    adapted_basis,
    complete_to_basis,
    content,
    coordinates,
    integer_kernel,
    integral_direction,
    lattice_contains,
    lattice_rank,
    normalize_sign,
    primitive_part,
    saturation,
)
from toricmorse.linalg.matrix import int_matrix, is_unimodular


def test_primitive_vectors():
    assert normalize_sign((0, -2, 1)) == ((0, 2, -1), True)
    assert normalize_sign((1, -1)) == ((1, -1), False)

    assert primitive_part((-2, 4)) == (1, -2)
    assert content((6, -9, 0)) == 3
    assert integral_direction((Fraction(1, 2), Fraction(1, 3))) == ((3, 2), 6)
    direction = integral_direction((Fraction(3, 4), Fraction(-5, 6), 2))
    assert direction == ((9, -10, 24), 12)

    with pytest.raises(ZeroCharacterError, match="zero character"):
        primitive_part((0, 0))


def test_integer_kernel():
    assert integer_kernel([(1, 1, 0)], 3) == ((1, -1, 0), (0, 0, 1))
    assert integer_kernel([(1, 0), (0, 1)], 2) == ()
    assert integer_kernel([], 2) == ((1, 0), (0, 1))


def test_saturation():
    assert saturation([(2, 0)], 2) == ((1, 0),)
    assert saturation([(2, 2), (0, 4)], 2) == ((1, 0), (0, 1))
    assert saturation([(1, -1), (2, -2)], 2) == ((1, -1),)


def test_complete_to_basis():
    completed = complete_to_basis([(1, 1)], 2)
    assert completed[0] == (1, 1)
    assert len(completed) == 2
    assert is_unimodular(completed)

    assert complete_to_basis([], 2) == ((1, 0), (0, 1))
    with pytest.raises(LatticeChainError):
        complete_to_basis([(2, 0)], 2)


def test_lattice_membership():
    assert lattice_contains([(2, 0), (0, 2)], (4, -2), 2)
    assert not lattice_contains([(2, 0), (0, 2)], (1, 0), 2)
    assert lattice_contains([], (0, 0), 2)

    assert coordinates((2, 3), [(1, 0), (1, 1)], 2) == (-1, 3)
    assert coordinates((1, 0), [(1, 1)], 2) is None


def test_adapted_basis():
    basis = adapted_basis([[(2, 2)]], 2)
    assert basis.prefix_ranks == (1,)
    assert basis.u[0] == (1, 1)
    assert is_unimodular(basis.u)

    chain = [[(0, 0, 1)], [(0, 0, 1), (0, 1, 0)]]
    basis = adapted_basis(chain, 3)
    assert basis.prefix_ranks == (1, 2)
    assert basis.u[0] == (0, 0, 1)
    assert basis.u[1][0] == 0
    assert basis.u[1][1] in (1, -1)
    assert is_unimodular(basis.u)


def test_adapted_basis_rejects_unnested_chain():
    with pytest.raises(LatticeChainError, match="not nested"):
        adapted_basis([[(1, 0)], [(0, 1)]], 2)


def test_lattice_rank():
    assert lattice_rank(int_matrix([[1, 0], [1, -1], [1, 1]])) == 2
    assert lattice_rank(int_matrix([[2, 4], [1, 2]])) == 1
    assert lattice_rank(int_matrix([], 3)) == 0
