"""
Posets of regions of real arrangements: separating sets, linear extensions
relative to a base chamber, the maps they induce on subarrangements, and the
flats X_C attached to the chambers of a central arrangement.
"""

import logging

import attr

from ..exception import InputError, InternalVerificationError, NotAChamberError
from ..utils.misc import format_signs, oneline
from .faces import compose_signs, face_poset

logger = logging.getLogger(__name__)


def separation(first, second):
    "The indices of the hyperplanes separating two chambers."
    return frozenset(i for i, (s, t) in enumerate(zip(first, second)) if s != t)


def compose_chamber(face, chamber):
    """
    The chamber C_F: the chamber adjacent to the face F on the same side as C
    of every hyperplane through F.
    """
    return compose_signs(face, chamber)


def restrict_signs(signs, positions):
    return tuple(signs[k] for k in positions)


@attr.s(frozen=True, eq=False)
class RegionOrder:
    """
    A linear extension of the poset of regions based at a chamber.

    Attributes
    ----------
    base: tuple of int
        The base chamber's sign vector.
    extension: tuple of tuples of int
        Every chamber, base first; C comes before D whenever the hyperplanes
        separating C from the base are a subset of those separating D.
    """

    base = attr.ib(converter=tuple)
    extension = attr.ib(converter=tuple)
    _positions = attr.ib(init=False)

    def __attrs_post_init__(self):
        object.__setattr__(
            self, "_positions", {c: i for i, c in enumerate(self.extension)}
        )

    def __len__(self):
        return len(self.extension)

    def __iter__(self):
        return iter(self.extension)

    def __contains__(self, chamber):
        return chamber in self._positions

    def index(self, chamber):
        return self._positions[chamber]

    def precedes(self, first, second):
        return self._positions[first] < self._positions[second]


def lex_least_chamber(chamber_signs):
    "The least chamber in lexicographic order with - < 0 < +."
    return min(chamber_signs)


def order_chambers(chamber_signs, base=None, extension=None):
    """
    Builds the RegionOrder of a set of chambers. Without an explicit
    ``extension``, chambers are sorted by the number of hyperplanes separating
    them from ``base`` and then lexicographically. An explicit extension is
    validated against the poset of regions.
    """
    chamber_signs = [tuple(c) for c in chamber_signs]
    known = set(chamber_signs)
    if base is None:
        base = lex_least_chamber(chamber_signs)
    base = tuple(base)
    if base not in known:
        raise NotAChamberError.for_signs(format_signs(base))

    if extension is None:
        ordered = sorted(chamber_signs, key=lambda c: (len(separation(c, base)), c))
        return RegionOrder(base, ordered)

    extension = [tuple(c) for c in extension]
    if len(extension) != len(known) or set(extension) != known:
        raise InputError(
            "An explicit region order must list every chamber exactly once"
        )
    if extension[0] != base:
        raise InputError("An explicit region order must start at the base chamber")
    separations = [separation(c, base) for c in extension]
    for i, later in enumerate(separations):
        for j in range(i):
            if later < separations[j]:
                raise InputError(
                    oneline(
                        f"""
                    Region order is not a linear extension:
                    {format_signs(extension[i])} must come before
                    {format_signs(extension[j])}"""
                    )
                )
    return RegionOrder(base, extension)


def region_order(arrangement, base=None, extension=None):
    "The RegionOrder of the chambers of an arrangement."
    chamber_signs = [face.signs for face in face_poset(arrangement).chambers()]
    return order_chambers(chamber_signs, base, extension)


def mu(positions, order):
    """
    For the subarrangement given by ``positions`` (indices into the arrangement
    ordered by ``order``), maps each of its chambers to the first chamber of
    ``order`` contained in it.
    """
    positions = tuple(positions)
    result = {}
    for chamber in order.extension:
        restricted = restrict_signs(chamber, positions)
        if restricted not in result:
            result[restricted] = chamber
    return result


def induced_order(positions, order):
    """
    The RegionOrder induced on a subarrangement: its chambers, ordered by the
    position of their images under ``mu``.
    """
    images = mu(positions, order)
    extension = sorted(images, key=lambda c: order.index(images[c]))
    return RegionOrder(restrict_signs(order.base, positions), extension)


def x_c(order, chamber, closed_sets):
    """
    Computes the flat X_C of a chamber of a central arrangement: the unique
    smallest closed set X with S(C, C') & X nonempty for every chamber C'
    preceding C. ``closed_sets`` lists the flats as frozensets of hyperplane
    indices.

    The candidates are checked to be exactly the closed sets containing X_C.
    """
    chamber = tuple(chamber)
    earlier = order.extension[: order.index(chamber)]
    separations = [separation(chamber, other) for other in earlier]
    closed_sets = [frozenset(X) for X in closed_sets]
    candidates = [X for X in closed_sets if all(s & X for s in separations)]
    smallest = [X for X in candidates if all(X <= Y for Y in candidates)]
    if len(smallest) != 1:
        raise InternalVerificationError.for_check(
            "x_c",
            oneline(
                f"""
            chamber {format_signs(chamber)} has {len(smallest)} minimal
            candidate flats among {len(candidates)}"""
            ),
        )
    (result,) = smallest
    if set(candidates) != {X for X in closed_sets if result <= X}:
        raise InternalVerificationError.for_check(
            "x_c",
            f"candidate flats of chamber {format_signs(chamber)} are not an ideal",
        )
    return result
