from fractions import Fraction

import pytest

from toricmorse.charts.strata import stratify
from toricmorse.datatypes import Polynomial
from toricmorse.exception import InternalVerificationError
from toricmorse.hyperplane.affine import AffineFaceStructure
from toricmorse.morse.matching import validate_matching
from toricmorse.morse.salvetti import (
    affine_salvetti_matching,
    check_census,
    salvetti_matching,
)
from toricmorse.toric.faces import ToricFaceStructure

from ..helpers import coordinate_torus, points_on_circle, toric
from .test_matching import chain


def test_running_salvetti_matching(running_structure):
    matching = salvetti_matching(stratify(running_structure))
    assert matching.certificate.census == (1, 5, 7)
    assert matching.certificate.n_critical == 13
    assert len(matching.strata) == 7
    # 23 objects, 13 critical.
    assert len(matching.certificate.matching) == 5
    for certificate in matching.strata:
        assert certificate.n_critical == 2 ** (len(certificate.census) - 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_punctured_circle(n):
    structure = ToricFaceStructure(points_on_circle(n))
    matching = salvetti_matching(stratify(structure))
    assert matching.certificate.census == (1, n + 1)


def test_coordinate_torus_salvetti():
    structure = ToricFaceStructure(coordinate_torus(2))
    matching = salvetti_matching(stratify(structure))
    assert matching.certificate.census == (1, 4, 4)


def test_level_shifted_lines():
    structure = ToricFaceStructure(
        toric(2, ((1, 0), 0), ((1, 0), Fraction(1, 2)), ((0, 1), 0))
    )
    matching = salvetti_matching(stratify(structure))
    assert Polynomial(matching.certificate.census) == Polynomial((1, 5, 6))


def test_affine_salvetti_matching(boolean, figure):
    matching = affine_salvetti_matching(stratify(AffineFaceStructure(boolean)))
    assert matching.certificate.census == (1, 2, 1)
    assert len(matching.strata) == 4

    matching = affine_salvetti_matching(stratify(AffineFaceStructure(figure)))
    assert matching.certificate.census == (1, 3, 2)


def test_check_census():
    certificate = validate_matching(chain(), ())
    check_census(certificate, Polynomial((1, 1, 1)))
    with pytest.raises(InternalVerificationError, match="Poincaré polynomial"):
        check_census(certificate, Polynomial((1, 2)))


@pytest.mark.slow
def test_three_torus_salvetti():
    structure = ToricFaceStructure(coordinate_torus(3))
    matching = salvetti_matching(stratify(structure))
    assert matching.certificate.census == (1, 6, 12, 8)


@pytest.mark.slow
def test_four_directions():
    structure = ToricFaceStructure(
        toric(2, ((1, 0), 0), ((0, 1), 0), ((1, 1), 0), ((1, -1), 0))
    )
    matching = salvetti_matching(stratify(structure))
    assert matching.certificate.census == (1, 6, 9)
