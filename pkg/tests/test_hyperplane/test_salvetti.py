import pytest

from toricmorse.hyperplane.faces import face_poset
from toricmorse.hyperplane.salvetti import salvetti_poset, strata_central

from ..helpers import central_corpus, hyperplanes


def test_boolean_salvetti_poset(boolean):
    poset = salvetti_poset(boolean)
    assert len(poset) == 16
    assert len(poset.top_cells()) == 4

    category = poset.category()
    assert category.census(category.objects) == (4, 8, 4)

    vertex = ((-1, 1), (-1, 1))
    edge = ((0, 1), (-1, 1))
    assert poset.leq(vertex, edge)
    assert poset.leq(((1, 1), (1, 1)), edge)
    assert not poset.leq(((1, -1), (1, -1)), edge)


def test_figure_salvetti_poset(figure):
    poset = salvetti_poset(figure)
    assert len(poset) == 24
    assert len(poset.top_cells()) == 6
    assert face_poset(figure).euler_characteristic() == 1
    category = poset.category()
    assert category.census(category.objects) == (6, 12, 6)


def test_strata_central(boolean, figure):
    strata = strata_central(boolean)
    assert len(strata.blocks) == 4
    assert sorted(len(block) for block in strata.blocks.values()) == [1, 3, 3, 9]
    base = strata.order.base
    assert strata.flats[base].dim == 2

    strata = strata_central(figure)
    sizes = sorted(len(block) for block in strata.blocks.values())
    assert sizes == [1, 1, 3, 3, 3, 13]
    assert sum(sizes) == 24
    for chamber, isomorphism in strata.isomorphisms.items():
        assert isomorphism.opposite
        assert len(isomorphism.object_map) == len(strata.blocks[chamber])


def test_strata_central_needs_central_arrangement():
    with pytest.raises(ValueError, match="central"):
        strata_central(hyperplanes(1, ((1,), 1)))


@pytest.mark.parametrize("arrangement", central_corpus(20))
def test_central_salvetti_posets(arrangement):
    faces = face_poset(arrangement)
    assert faces.euler_characteristic() == (-1) ** arrangement.dim

    # Top cells sit over the common intersection, one per chamber.
    poset = salvetti_poset(arrangement, faces)
    assert len(poset.top_cells()) == len(faces.chambers())
    assert sum((-1) ** poset.ranks[cell] for cell in poset.cells) == 0
