"""
Faces of real hyperplane arrangements, enumerated exactly.

Faces are found flat by flat, starting from the smallest flats: every face
that is open in a flat X, other than X itself, has a facet lying in some
smaller flat X & H, so it can be reached by pushing a witness point of that
facet slightly off H in both directions.
"""

from fractions import Fraction
import logging

import attr

from ..linalg.matrix import dot
from ..utils.misc import format_signs
from .arrangement import intersection_poset

logger = logging.getLogger(__name__)


@attr.s(frozen=True)
class Face:
    """
    A face of an arrangement: its sign vector, a rational point in its relative
    interior and its dimension.
    """

    signs = attr.ib(converter=tuple)
    witness = attr.ib(converter=tuple, eq=False)
    dim = attr.ib(eq=False)

    @property
    def is_chamber(self):
        return all(self.signs)

    def __str__(self):
        return format_signs(self.signs)


def face_leq(lower, upper):
    """
    Whether the face with sign vector ``lower`` lies in the closure of the face
    with sign vector ``upper``.
    """
    return all(s == 0 or s == t for s, t in zip(lower, upper))


def compose_signs(first, second):
    "The sign vector F o G: the signs of F where nonzero, else those of G."
    return tuple(s if s else t for s, t in zip(first, second))


@attr.s(frozen=True, eq=False)
class FacePoset:
    """
    All faces of an arrangement, sorted by dimension and then by sign vector.
    """

    arrangement = attr.ib()
    faces = attr.ib(converter=tuple)
    _by_signs = attr.ib(init=False)

    def __attrs_post_init__(self):
        object.__setattr__(self, "_by_signs", {face.signs: face for face in self.faces})

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def __getitem__(self, signs):
        return self._by_signs[tuple(signs)]

    def __contains__(self, signs):
        return tuple(signs) in self._by_signs

    def leq(self, lower, upper):
        return face_leq(lower.signs, upper.signs)

    def chambers(self):
        return [face for face in self.faces if face.is_chamber]

    def minimal_faces(self):
        return [
            face
            for face in self.faces
            if not any(
                other.dim < face.dim and self.leq(other, face) for other in self.faces
            )
        ]

    def face_at(self, point):
        return self[self.arrangement.sign_vector(point)]

    def f_vector(self):
        counts = [0] * (self.arrangement.dim + 1)
        for face in self.faces:
            counts[face.dim] += 1
        return tuple(counts)

    def euler_characteristic(self):
        "The compactly supported Euler characteristic, sum of (-1)^dim."
        return sum((-1) ** face.dim for face in self.faces)


def face_poset(arrangement, poset=None):
    "Enumerates every face of an arrangement with an exact witness point."
    if poset is None:
        poset = intersection_poset(arrangement)

    open_faces = {}
    for flat in sorted(poset.flats, key=lambda f: (f.dim, f.closed)):
        open_faces[flat.closed] = _open_faces(arrangement, poset, flat, open_faces)

    faces = [face for faces in open_faces.values() for face in faces]
    faces.sort(key=lambda face: (face.dim, face.signs))
    logger.debug(
        "Enumerated %d faces of an arrangement of %d hyperplanes in R^%d",
        len(faces),
        len(arrangement),
        arrangement.dim,
    )
    return FacePoset(arrangement, faces)


def _open_faces(arrangement, poset, flat, open_faces):
    cutting = [i for i in range(len(arrangement)) if arrangement.cuts(i, flat)]
    if not cutting:
        point = flat.point
        return [Face(arrangement.sign_vector(point), point, flat.dim)]

    found = {}
    for i in cutting:
        form = arrangement.hyperplanes[i]
        normal = next(w for w in flat.basis if dot(form.alpha, w) != 0)
        facet_flat = poset.flat_of(flat.closed + (i,))
        for facet in open_faces[facet_flat.closed]:
            epsilon = _safe_step(arrangement, facet.witness, normal)
            for direction in (1, -1):
                point = tuple(
                    x + direction * epsilon * n for x, n in zip(facet.witness, normal)
                )
                signs = arrangement.sign_vector(point)
                if signs not in found:
                    found[signs] = Face(signs, point, flat.dim)
    return sorted(found.values(), key=lambda face: face.signs)


def _safe_step(arrangement, point, direction):
    """
    Returns a positive step such that moving ``point`` by up to twice that step
    along +/- ``direction`` crosses no hyperplane not already containing it.
    """
    bounds = []
    for form in arrangement.hyperplanes:
        value = form.value(point)
        slope = dot(form.alpha, direction)
        if value != 0 and slope != 0:
            bounds.append(abs(value / slope))
    if not bounds:
        return Fraction(1)
    return min(bounds) / 2


def chambers(arrangement):
    "The full-dimensional faces of an arrangement."
    return face_poset(arrangement).chambers()
