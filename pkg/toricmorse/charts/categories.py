"""
Face categories and Salvetti categories of face structures.

A non-identity morphism of the face category out of F is a nonzero face g of
A[F]; its target is the face selected by g. A Salvetti object is a pair
(F, c) with c a chamber of A[F], i.e. a morphism from F to a chamber. A
Salvetti morphism (F1, c1) -> (F2, c2) is a nonzero face g of A[F2] selecting
F1 with c1 equal to c2 on the items through F1.
"""

import logging

import attr

from ..datatypes import Morphism
from ..morse.category import AcyclicCategory

logger = logging.getLogger(__name__)


def compose_local(outer, inner):
    """
    Composes local faces: ``outer`` is a face of A[F] and ``inner`` a face of
    A[G] for the face G selected by ``outer``, aligned with the zero entries of
    ``outer``. Returns the face of A[F] selecting the same face as ``inner``.
    """
    remaining = iter(inner)
    return tuple(s if s else next(remaining) for s in outer)


def restrict_to_zeros(signs, local):
    "The entries of ``signs`` at the zero entries of the local face ``local``."
    return tuple(s for s, t in zip(signs, local) if t == 0)


def _compose_face_morphisms(first, second):
    return Morphism(first.source, second.target, compose_local(first.tag, second.tag))


def _compose_salvetti_morphisms(first, second):
    return Morphism(first.source, second.target, compose_local(second.tag, first.tag))


def face_category(structure):
    "The face category F(A) of a face structure; ranks are dimensions."
    morphisms = []
    for face in structure.faces:
        local = structure.local_arrangement(face)
        for local_face in structure.local_faces(local):
            if not any(local_face.signs):
                continue
            target = structure.face_from_local(face, local_face.signs)
            morphisms.append(Morphism(face, target, local_face.signs))
    category = AcyclicCategory(
        objects=structure.faces,
        morphisms=morphisms,
        ranks={face: structure.face_dim(face) for face in structure.faces},
        compose=_compose_face_morphisms,
        name="face category",
    )
    logger.debug("Built %r", category)
    return category


def salvetti_objects(structure):
    "The objects (F, c) of the Salvetti category, sorted by rank."
    objects = []
    for face in structure.faces:
        local = structure.local_arrangement(face)
        for chamber in structure.local_faces(local).chambers():
            objects.append((face, chamber.signs))
    ranks = {obj: structure.dim - structure.face_dim(obj[0]) for obj in objects}
    order = {face: i for i, face in enumerate(structure.faces)}
    objects.sort(key=lambda obj: (ranks[obj], order[obj[0]], obj[1]))
    return objects, ranks


def salvetti_category(structure):
    """
    The Salvetti category of a face structure; the rank of (F, c) is the
    codimension of F.
    """
    objects, ranks = salvetti_objects(structure)
    morphisms = []
    for target in objects:
        face, chamber = target
        local = structure.local_arrangement(face)
        for local_face in structure.local_faces(local):
            if not any(local_face.signs):
                continue
            source = (
                structure.face_from_local(face, local_face.signs),
                restrict_to_zeros(chamber, local_face.signs),
            )
            morphisms.append(Morphism(source, target, local_face.signs))
    category = AcyclicCategory(
        objects=objects,
        morphisms=morphisms,
        ranks=ranks,
        compose=_compose_salvetti_morphisms,
        name="Salvetti category",
    )
    logger.debug("Built %r", category)
    return category


@attr.s(frozen=True)
class FaceMap:
    """
    The data a face-category morphism m: F -> G induces on local arrangements.

    Attributes
    ----------
    inclusion: dict
        i_m, mapping each face of A[G] to the corresponding face of A[F].
    selected: tuple of int
        F_m, the face of A[F] that selects G.
    """

    inclusion = attr.ib()
    selected = attr.ib(converter=tuple)


def face_map(structure, morphism):
    "Computes i_m and F_m for a morphism of the face category."
    target_local = structure.local_arrangement(morphism.target)
    inclusion = {
        face.signs: compose_local(morphism.tag, face.signs)
        for face in structure.local_faces(target_local)
    }
    return FaceMap(inclusion=inclusion, selected=morphism.tag)


def identity_face_map(structure, face):
    "i and F for the identity of ``face``: the identity map and the origin."
    local = structure.local_arrangement(face)
    inclusion = {f.signs: f.signs for f in structure.local_faces(local)}
    return FaceMap(inclusion=inclusion, selected=(0,) * len(local))
