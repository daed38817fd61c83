from toricmorse.datatypes import Polynomial
from toricmorse.homology.poincare import (
    poincare_from_counts,
    poincare_hyperplane,
    poincare_toric,
)
from toricmorse.toric.faces import ToricFaceStructure

from ..helpers import coordinate_torus, hyperplanes, points_on_circle


def test_polynomial_arithmetic():
    p = Polynomial((1, 5, 7))
    assert str(p) == "1 + 5t + 7t^2"
    assert p(1) == 13
    assert p(-1) == 3
    assert Polynomial((1, 2, 0, 0)) == Polynomial((1, 2))
    assert Polynomial.one_plus_t(3) == Polynomial((1, 3, 3, 1))
    assert Polynomial.monomial(2, 4) == Polynomial((0, 0, 4))
    assert Polynomial((1, 1)) * Polynomial((1, 1)) == Polynomial((1, 2, 1))
    assert Polynomial((1, 1)) + Polynomial((0, 0, 1)) == Polynomial((1, 1, 1))
    assert str(Polynomial((0, 1))) == "t"
    assert str(Polynomial(())) == "0"
    assert Polynomial((1, 2)).coefficient(5) == 0


def test_toric_poincare(running_structure):
    assert poincare_toric(running_structure.layer_poset) == Polynomial((1, 5, 7))
    assert poincare_toric(running_structure) == Polynomial((1, 5, 7))


def test_deficiency_factor(running_structure):
    poincare = poincare_toric(running_structure.layer_poset, deficiency=1)
    assert poincare == Polynomial((1, 5, 7)) * Polynomial((1, 1))
    assert poincare(1) == 26


def test_small_toric_poincare():
    circle = ToricFaceStructure(points_on_circle(3))
    assert poincare_toric(circle.layer_poset) == Polynomial((1, 4))
    torus = ToricFaceStructure(coordinate_torus(2))
    assert poincare_toric(torus.layer_poset) == Polynomial((1, 4, 4))


def test_from_counts():
    assert poincare_from_counts([1, 3, 3]) == Polynomial((1, 5, 7))
    assert poincare_from_counts([1]) == Polynomial((1,))
    assert poincare_from_counts([1], deficiency=2) == Polynomial((1, 2, 1))


def test_hyperplane_poincare(boolean, figure):
    assert poincare_hyperplane(boolean) == Polynomial((1, 2, 1))
    assert poincare_hyperplane(figure) == Polynomial((1, 3, 2))
    generic = hyperplanes(2, ((1, 0), 0), ((0, 1), 0), ((1, 1), 1))
    assert poincare_hyperplane(generic) == Polynomial((1, 3, 3))
    parallel = hyperplanes(1, ((1,), 0), ((1,), 1))
    assert poincare_hyperplane(parallel) == Polynomial((1, 2))
