"""
The Salvetti poset of a real arrangement and its stratification by chambers.
"""

import logging

import attr

from ..datatypes import Morphism
from ..exception import InternalVerificationError
from ..morse.category import AcyclicCategory, check_isomorphism
from ..utils.misc import format_signs, oneline
from .arrangement import intersection_poset
from .faces import compose_signs, face_leq, face_poset
from .regions import region_order, x_c

logger = logging.getLogger(__name__)


@attr.s(frozen=True, eq=False)
class SalvettiPoset:
    """
    The cells [F, C] of the Salvetti complex of an arrangement, with F a face,
    C a chamber and F <= C, ordered by [F1, C1] <= [F2, C2] iff F2 <= F1 and
    F1 o C2 = C1. Cells are pairs of sign vectors; the rank of [F, C] is the
    codimension of F.
    """

    faces = attr.ib()
    cells = attr.ib(converter=tuple)
    ranks = attr.ib()

    def __len__(self):
        return len(self.cells)

    def leq(self, lower, upper):
        (f1, c1), (f2, c2) = lower, upper
        return face_leq(f2, f1) and compose_signs(f1, c2) == c1

    def category(self):
        return AcyclicCategory.from_poset(
            self.cells, self.leq, self.ranks, name="Salvetti poset"
        )

    def top_cells(self):
        top = max(self.ranks.values())
        return [cell for cell in self.cells if self.ranks[cell] == top]


def salvetti_poset(arrangement, faces=None):
    if faces is None:
        faces = face_poset(arrangement)
    chambers = faces.chambers()
    cells = []
    ranks = {}
    for face in faces:
        for chamber in chambers:
            if faces.leq(face, chamber):
                cell = (face.signs, chamber.signs)
                cells.append(cell)
                ranks[cell] = arrangement.dim - face.dim
    cells.sort(key=lambda cell: (ranks[cell], cell))
    logger.debug("Salvetti poset has %d cells", len(cells))
    return SalvettiPoset(faces, cells, ranks)


@attr.s(frozen=True, eq=False)
class CentralStrata:
    """
    The partition of the Salvetti poset of a central arrangement into the
    strata N_C, one per chamber.

    Attributes
    ----------
    order: RegionOrder
    flats: dict
        Maps each chamber to its flat X_C.
    blocks: dict
        Maps each chamber to the cells of N_C.
    isomorphisms: dict
        Maps each chamber to the CategoryIsomorphism from N_C onto the opposite
        of the face poset of the restriction A^{X_C}.
    """

    order = attr.ib()
    flats = attr.ib()
    blocks = attr.ib()
    isomorphisms = attr.ib()


def strata_central(arrangement, order=None):
    """
    Splits the Salvetti poset of a central arrangement into the strata
    N_C = S_C minus the earlier S_C', where S_C is the set of cells below
    [P, C] for the center P. Each N_C is checked to be isomorphic to the
    opposite face poset of A^{X_C}.
    """
    if not arrangement.is_central:
        raise ValueError("strata_central needs a central arrangement")
    faces = face_poset(arrangement)
    salvetti = salvetti_poset(arrangement, faces)
    flats = intersection_poset(arrangement)
    if order is None:
        order = region_order(arrangement)

    (center,) = [face for face in faces if not any(face.signs)]
    closed_sets = [frozenset(flat.closed) for flat in flats.flats]

    category = salvetti.category()
    covered = set()
    x_flats = {}
    blocks = {}
    isomorphisms = {}
    for chamber in order.extension:
        closed = x_c(order, chamber, closed_sets)
        flat = flats[sorted(closed)]
        x_flats[chamber] = flat

        top = (center.signs, chamber)
        stratum = [
            cell
            for cell in salvetti.cells
            if cell not in covered and salvetti.leq(cell, top)
        ]
        covered.update(cell for cell in salvetti.cells if salvetti.leq(cell, top))
        blocks[chamber] = tuple(stratum)
        isomorphisms[chamber] = _check_stratum(
            arrangement, faces, category, flat, chamber, stratum
        )

    if len(covered) != len(salvetti.cells):
        raise InternalVerificationError.for_check(
            "strata", "the strata do not cover the Salvetti poset"
        )
    return CentralStrata(order, x_flats, blocks, isomorphisms)


def _check_stratum(arrangement, faces, category, flat, chamber, stratum):
    restricted, _ = arrangement.restrict(flat)
    restricted_faces = face_poset(restricted)

    object_map = {}
    for cell in stratum:
        face_signs, cell_chamber = cell
        face = faces[face_signs]
        if any(face_signs[i] for i in flat.closed):
            raise InternalVerificationError.for_check(
                "strata",
                oneline(
                    f"""
                cell [{format_signs(face_signs)}, {format_signs(cell_chamber)}]
                of the stratum of {format_signs(chamber)} is not in X_C"""
                ),
            )
        if compose_signs(face_signs, chamber) != cell_chamber:
            raise InternalVerificationError.for_check(
                "strata",
                f"cell chamber {format_signs(cell_chamber)} is not F o C",
            )
        image = restricted_faces.face_at(flat.coordinates_of(face.witness))
        if category.ranks[cell] != arrangement.dim - image.dim:
            raise InternalVerificationError.for_check(
                "strata", "ranks are not reversed by the stratum isomorphism"
            )
        object_map[cell] = image.signs

    block = category.full_subcategory(stratum, name="N_C")
    target = AcyclicCategory.from_poset(
        [face.signs for face in restricted_faces],
        face_leq,
        {face.signs: face.dim for face in restricted_faces},
        name="F(A^X)",
    )
    morphism_map = {
        m: Morphism(object_map[m.target], object_map[m.source])
        for m in block.morphisms
    }
    return check_isomorphism(block, target, object_map, morphism_map, opposite=True)
