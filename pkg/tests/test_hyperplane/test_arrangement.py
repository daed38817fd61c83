from fractions import Fraction

import pytest

from toricmorse.exception import ZeroCharacterError
from toricmorse.hyperplane.arrangement import (
    Arrangement,
    HalfspaceForm,
    intersection_poset,
    normalize_forms,
)

from ..helpers import hyperplanes


def test_halfspace_form():
    form = HalfspaceForm((2, -4), 1)
    assert form.value((1, 0)) == 1
    assert form.side((0, 1)) == -1
    assert form.side((Fraction(1, 2), 0)) == 0

    normalized = HalfspaceForm((-2, 4), 1).normalized()
    assert normalized.alpha == (1, -2)
    assert normalized.b == Fraction(-1, 2)
    assert normalized.normal == (1, -2)

    with pytest.raises(ZeroCharacterError, match="zero character"):
        HalfspaceForm((0, 0), 1)


def test_unnormalized_forms_have_integral_normals():
    form = HalfspaceForm((Fraction(1, 2), 1), 0)
    assert form.normal == (1, 2)
    assert HalfspaceForm((Fraction(-2, 3), Fraction(4, 9)), 1).normal == (-3, 2)

    arrangement = Arrangement(2, [form])
    flat = arrangement.flat([0])
    assert flat.dim == 1
    for vector in flat.basis:
        assert form.value(vector) == 0


def test_normalize_forms_drops_repeats():
    forms = [HalfspaceForm((2, 0), 2), HalfspaceForm((-1, 0), -1)]
    unique, mapping = normalize_forms(forms)
    assert unique == [HalfspaceForm((1, 0), 1)]
    assert mapping == [0, 0]

    arrangement = Arrangement.from_forms(2, forms + [HalfspaceForm((0, 1), 0)])
    assert len(arrangement) == 2


def test_flats(boolean):
    assert boolean.is_central
    assert boolean.rank == 2

    whole = boolean.flat(())
    assert whole.closed == ()
    assert whole.dim == 2
    origin = boolean.flat((0, 1))
    assert origin.closed == (0, 1)
    assert origin.dim == 0
    assert origin.point == (0, 0)

    parallel = hyperplanes(2, ((1, 0), 0), ((1, 0), 1))
    assert not parallel.is_central
    assert parallel.flat((0, 1)) is None
    assert parallel.rank == 1


def test_flat_closure(figure):
    # Two of the three lines already cut out the origin.
    assert figure.flat((1, 2)).closed == (0, 1, 2)


def test_intersection_poset(boolean, figure):
    poset = intersection_poset(boolean)
    assert len(poset) == 4
    assert poset.flats[0].closed == ()
    assert [poset.codim(flat) for flat in poset.flats] == [0, 1, 1, 2]

    poset = intersection_poset(figure)
    assert len(poset) == 5
    assert poset.flat_of((0, 2)).closed == (0, 1, 2)
    assert poset.leq(poset[()], poset[(1,)])

    generic = hyperplanes(2, ((1, 0), 0), ((0, 1), 1), ((1, 1), 3))
    assert len(intersection_poset(generic)) == 1 + 3 + 3


def test_restrict(figure):
    flat = figure.flat((0,))
    restricted, index_map = figure.restrict(flat)
    assert restricted.dim == 1
    assert len(restricted) == 1
    assert index_map == {1: 0, 2: 0}

    shifted = hyperplanes(2, ((1, 0), 0), ((0, 1), 3))
    restricted, index_map = shifted.restrict(shifted.flat((0,)))
    assert index_map == {1: 0}
    (form,) = restricted.hyperplanes
    assert abs(form.b) == 3
