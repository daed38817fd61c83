"""
Affine arrangements as face structures, and the minimal complex of their
complements: the Salvetti category is stratified by flats, every stratum is
collapsed to one cell, and the critical census is checked against Brieskorn's
formula.
"""

import logging

import attr

from ..charts.categories import salvetti_category
from ..charts.strata import stratify, verify_y_counts
from ..charts.structure import FaceStructure, Restriction
from ..config import DEFAULT_CONFIG
from ..datatypes import Morphism
from ..exception import InternalVerificationError
from ..homology.poincare import poincare_hyperplane
from ..linalg.lattice import complete_to_basis
from ..morse.category import check_isomorphism
from ..morse.salvetti import affine_salvetti_matching, check_census
from ..utils.misc import format_signs
from .arrangement import Arrangement, intersection_poset
from .faces import face_poset
from .salvetti import salvetti_poset

logger = logging.getLogger(__name__)


class AffineFaceStructure(FaceStructure):
    """
    The faces of a real affine arrangement, keyed by sign vector, with its
    flats as layers. A_0 holds the distinct normals in order of appearance.
    """

    def __init__(self, arrangement):
        arrangement = Arrangement.from_forms(arrangement.dim, arrangement.hyperplanes)
        directions = []
        item_directions = []
        for form in arrangement.hyperplanes:
            if form.normal not in directions:
                directions.append(form.normal)
            item_directions.append(directions.index(form.normal))
        super(AffineFaceStructure, self).__init__(
            arrangement.dim, directions, item_directions
        )
        self.arrangement = arrangement
        self.flats = intersection_poset(arrangement)
        self.face_poset = face_poset(arrangement, self.flats)
        logger.debug("Built %r", self)

    def _by_direction(self, items):
        return tuple(sorted(items, key=lambda i: self.item_directions[i]))

    # Faces.

    @property
    def faces(self):
        return tuple(face.signs for face in self.face_poset)

    def face_dim(self, face):
        return self.face_poset[face].dim

    def face_witness(self, face):
        return self.face_poset[face].witness

    def face_items(self, face):
        return self._by_direction(i for i, s in enumerate(face) if s == 0)

    def face_at(self, point):
        signs = self.arrangement.sign_vector(point)
        if signs not in self.face_poset:
            raise InternalVerificationError.for_check(
                "faces", f"point {point!r} has an unknown sign vector"
            )
        return signs

    def face_from_local(self, face, local_signs):
        signs = list(face)
        for item, s in zip(self.face_items(face), local_signs):
            signs[item] = s
        return tuple(signs)

    def describe_face(self, face):
        return f"face {format_signs(face)}"

    # Layers.

    @property
    def layers(self):
        return tuple(flat.closed for flat in self.flats.flats)

    def layer_dim(self, layer):
        return self.flats[layer].dim

    def layer_items(self, layer):
        return self._by_direction(layer)

    def layer_through(self, face, items):
        return self.flats.flat_of(items).closed

    def describe_layer(self, layer):
        if not layer:
            return "the whole space"
        return "flat of hyperplanes " + ",".join(str(i) for i in layer)

    def _build_restriction(self, layer):
        flat = self.flats[layer]
        restricted, _ = self.arrangement.restrict(flat)
        return Restriction(
            layer=layer,
            structure=AffineFaceStructure(restricted),
            origin=flat.point,
            basis=complete_to_basis(flat.basis, self.dim),
        )


def check_salvetti_poset(structure, category):
    """
    Checks that the Salvetti category of an affine face structure is the
    Salvetti poset: (F, c) corresponds to the cell [F, F o c].
    """
    poset = salvetti_poset(structure.arrangement, structure.face_poset)
    object_map = {
        obj: (obj[0], structure.face_from_local(*obj)) for obj in category.objects
    }
    morphism_map = {
        m: Morphism(object_map[m.source], object_map[m.target])
        for m in category.morphisms
    }
    return check_isomorphism(category, poset.category(), object_map, morphism_map)


@attr.s(frozen=True, eq=False)
class AffineMinimal:
    """
    The minimal complex of an affine arrangement complement.

    Attributes
    ----------
    structure: AffineFaceStructure
    stratification: Stratification
    matching: SalvettiMatching
    poincare: Polynomial
        The Poincaré polynomial from Brieskorn's formula; its coefficients are
        the critical census of the matching.
    """

    structure = attr.ib()
    stratification = attr.ib()
    matching = attr.ib()
    poincare = attr.ib()

    @property
    def census(self):
        return self.matching.certificate.census


def affine_minimal(arrangement, config=DEFAULT_CONFIG):
    """
    Collapses the Salvetti complex of an affine arrangement to a minimal
    complex, verifying every step.
    """
    structure = AffineFaceStructure(arrangement)
    category = salvetti_category(structure)
    check_salvetti_poset(structure, category)

    stratification = stratify(structure, category, config)
    verify_y_counts(stratification)
    matching = affine_salvetti_matching(stratification, config)
    poincare = poincare_hyperplane(structure.arrangement)
    check_census(matching.certificate, poincare)
    logger.info(
        "Minimal complex with census %s for %d hyperplanes",
        matching.certificate.census,
        len(structure.arrangement),
    )
    return AffineMinimal(structure, stratification, matching, poincare)
