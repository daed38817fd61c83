from fractions import Fraction

import pytest

from toricmorse.charts.categories import salvetti_category
from toricmorse.charts.strata import (
    LocalOrders,
    YElement,
    base_order,
    stratify,
    theta,
    verify_xi,
    verify_y_counts,
    xi,
    y_set,
)
from toricmorse.config import DEFAULT_CONFIG
from toricmorse.exception import FaceNotInLayerError, InputError, NotAChamberError
from toricmorse.hyperplane.affine import AffineFaceStructure
from toricmorse.toric.layers import TORUS_KEY


def test_base_order(running_structure):
    order = base_order(running_structure)
    assert len(order) == 6
    assert order.base == (-1, -1, -1)

    config = DEFAULT_CONFIG.set(base_chamber="+++")
    assert base_order(running_structure, config).base == (1, 1, 1)

    with pytest.raises(NotAChamberError):
        base_order(running_structure, DEFAULT_CONFIG.set(base_chamber="+0+"))
    with pytest.raises(InputError, match="Sign strings"):
        base_order(running_structure, DEFAULT_CONFIG.set(base_chamber="+x+"))


def test_y_set(running_structure):
    orders = LocalOrders(running_structure, base_order(running_structure))
    elements = y_set(running_structure, orders)
    assert len(elements) == 7
    assert elements[0] == YElement(TORUS_KEY, ())
    dims = [running_structure.layer_dim(y.layer) for y in elements]
    assert sorted(dims) == [0, 0, 0, 1, 1, 1, 2]


def test_running_example_stratification(running_structure):
    stratification = stratify(running_structure)
    assert stratification.y_counts() == (3, 3, 1)
    assert verify_y_counts(stratification) == (3, 3, 1)
    verify_xi(stratification)

    sizes = sorted(len(stratum.objects) for stratum in stratification.strata)
    assert sizes == [1, 1, 1, 2, 4, 4, 10]
    codims = sorted(stratum.codim for stratum in stratification.strata)
    assert codims == [0, 1, 1, 1, 2, 2, 2]

    torus_stratum = stratification.strata[0]
    assert torus_stratum.element.layer == TORUS_KEY
    assert torus_stratum.isomorphism.opposite


def test_strata_are_closed_downwards(running_structure):
    stratification = stratify(running_structure)
    positions = stratification.positions()
    assert len(positions) == 23
    for m in stratification.category.morphisms:
        assert positions[m.source] <= positions[m.target]


def test_theta_is_onto_y(running_structure):
    stratification = stratify(running_structure)
    for stratum in stratification.strata:
        for obj in stratum.objects:
            assert stratification.theta[obj] in stratification.elements
    assert set(stratification.theta.values()) == set(stratification.elements)


@pytest.mark.parametrize("base", ["+++", "---", "+-+"])
def test_stratification_with_other_bases(running_structure, base):
    config = DEFAULT_CONFIG.set(base_chamber=base)
    stratification = stratify(running_structure, config=config)
    assert stratification.y_counts() == (3, 3, 1)
    verify_xi(stratification)


def test_xi_needs_face_in_layer(running_structure):
    stratification = stratify(running_structure)
    orders = stratification.orders
    chamber = running_structure.face_at((Fraction(1, 4), 0))
    (vertex_element,) = [
        y
        for y in stratification.elements
        if running_structure.layer_dim(y.layer) == 0
        and not running_structure.contains(y.layer, chamber)
    ][:1]
    with pytest.raises(FaceNotInLayerError):
        xi(running_structure, orders, chamber, vertex_element)


def test_theta_of_base_object(running_structure):
    stratification = stratify(running_structure)
    orders = stratification.orders
    chamber = running_structure.face_at((Fraction(1, 4), 0))
    assert theta(running_structure, orders, (chamber, ())) == YElement(TORUS_KEY, ())


def test_affine_stratification(figure):
    structure = AffineFaceStructure(figure)
    category = salvetti_category(structure)
    stratification = stratify(structure, category)
    assert stratification.y_counts() == (2, 3, 1)
    sizes = sorted(len(stratum.objects) for stratum in stratification.strata)
    assert sizes == [1, 1, 3, 3, 3, 13]
