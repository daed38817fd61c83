from toricmorse.charts.categories import (
    compose_local,
    face_category,
    face_map,
    identity_face_map,
    restrict_to_zeros,
    salvetti_category,
)
from toricmorse.hyperplane.affine import AffineFaceStructure


def test_local_face_helpers():
    assert compose_local((0, 1, 0), (-1, 1)) == (-1, 1, 1)
    assert compose_local((1, -1), ()) == (1, -1)
    assert restrict_to_zeros((1, -1, 1), (0, 1, 0)) == (1, 1)


def test_face_category(running_structure):
    category = face_category(running_structure)
    assert len(category.objects) == 10
    # Twelve morphisms out of the triple point, eight out of the double point
    # and two out of each edge.
    assert len(category.morphisms) == 12 + 8 + 5 * 2
    category.check_acyclic()
    assert category.census(category.objects) == (2, 5, 3)
    assert category.height == 2

    for m in category.morphisms:
        assert category.ranks[m.source] < category.ranks[m.target]


def test_face_category_composition(running_structure):
    category = face_category(running_structure)
    for first in category.morphisms:
        for second in category.morphisms_from(first.target):
            composite = category.compose(first, second)
            assert composite in category.hom_set(first.source, second.target)


def test_salvetti_category(running_structure):
    category = salvetti_category(running_structure)
    assert len(category.objects) == 23
    assert category.census(category.objects) == (3, 10, 10)
    category.check_acyclic()
    for m in category.morphisms:
        assert category.ranks[m.source] < category.ranks[m.target]
    for first in category.morphisms:
        for second in category.morphisms_from(first.target):
            composite = category.compose(first, second)
            assert composite in category.hom_set(first.source, second.target)


def test_affine_salvetti_category(boolean):
    category = salvetti_category(AffineFaceStructure(boolean))
    assert len(category.objects) == 16
    assert len(category.indecomposables) == 8 * 2 + 4 * 4


def test_face_maps(running_structure):
    category = face_category(running_structure)
    vertex = running_structure.face_at((0, 0))
    identity = identity_face_map(running_structure, vertex)
    assert identity.selected == (0, 0, 0)
    assert len(identity.inclusion) == 13

    for m in category.morphisms_from(vertex):
        fm = face_map(running_structure, m)
        assert fm.selected == m.tag
        target_faces = running_structure.local_faces(
            running_structure.local_arrangement(m.target)
        )
        assert len(fm.inclusion) == len(target_faces)
        zero = (0,) * len(running_structure.face_items(m.target))
        assert fm.inclusion[zero] == m.tag
