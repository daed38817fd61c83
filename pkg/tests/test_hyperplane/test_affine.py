from toricmorse.charts.categories import salvetti_category
from toricmorse.hyperplane.affine import (
    AffineFaceStructure,
    affine_minimal,
    check_salvetti_poset,
)

from ..helpers import hyperplanes


def test_affine_face_structure(figure):
    structure = AffineFaceStructure(figure)
    assert structure.dim == 2
    assert len(structure.directions) == 3
    assert structure.f_vector() == (1, 6, 6)
    assert structure.euler_characteristic() == 1

    origin = (0, 0, 0)
    assert structure.face_dim(origin) == 0
    assert structure.face_items(origin) == (0, 1, 2)
    assert structure.face_from_local(origin, (1, -1, 1)) == (1, -1, 1)
    assert structure.face_at((0, 0)) == origin

    assert len(structure.layers) == 5
    assert structure.describe_layer(()) == "the whole space"
    assert structure.layer_through(origin, (1, 2)) == (0, 1, 2)


def test_parallel_directions():
    structure = AffineFaceStructure(
        hyperplanes(2, ((1, 0), 0), ((0, 1), 0), ((1, 0), 1))
    )
    assert structure.directions == ((1, 0), (0, 1))
    assert structure.item_directions == (0, 1, 0)


def test_salvetti_category_is_the_salvetti_poset(boolean):
    structure = AffineFaceStructure(boolean)
    category = salvetti_category(structure)
    assert len(category.objects) == 16
    isomorphism = check_salvetti_poset(structure, category)
    assert not isomorphism.opposite


def test_minimal_complex_generic_lines():
    minimal = affine_minimal(hyperplanes(2, ((1, 0), 0), ((0, 1), 1)))
    assert minimal.census == (1, 2, 1)
    assert minimal.poincare.coefficients == (1, 2, 1)


def test_minimal_complex_concurrent_lines(figure):
    minimal = affine_minimal(figure)
    assert minimal.census == (1, 3, 2)
    assert len(minimal.stratification.strata) == 6


def test_minimal_complex_single_point():
    minimal = affine_minimal(hyperplanes(1, ((1,), 0)))
    assert minimal.census == (1, 1)


def test_minimal_complex_parallel_lines():
    minimal = affine_minimal(hyperplanes(2, ((1, 0), 0), ((1, 0), 1)))
    assert minimal.poincare.coefficients == (1, 2)
    assert minimal.matching.certificate.n_critical == 3
