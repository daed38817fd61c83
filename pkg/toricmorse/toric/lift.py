"""
The periodic lift of a toric arrangement to R^d, restricted to the hyperplanes
meeting the unit cube, and a check that the cube recovers the torus
decomposition.
"""

import logging
import math

import attr

from ..exception import InternalVerificationError
from ..hyperplane.arrangement import Arrangement, HalfspaceForm
from ..hyperplane.faces import face_poset
from ..utils.misc import oneline

logger = logging.getLogger(__name__)


@attr.s(frozen=True, eq=False)
class LiftedChunk:
    """
    The lifted hyperplanes <alpha_i, x> = level_i + k meeting [0, 1]^d.

    Attributes
    ----------
    arrangement: Arrangement
    origins: tuple of (int, int)
        For each hyperplane, the item index i and the translate k.
    """

    arrangement = attr.ib()
    origins = attr.ib(converter=tuple)

    def __len__(self):
        return len(self.origins)

    def translates(self, item):
        return [k for i, k in self.origins if i == item]


def lift(arrangement):
    """
    Lists the lifts of every item meeting the closed unit cube: on the cube
    <alpha, x> ranges over [sum of negative entries, sum of positive entries].
    """
    forms = []
    origins = []
    for i, item in enumerate(arrangement.items):
        low = sum(min(a, 0) for a in item.character)
        high = sum(max(a, 0) for a in item.character)
        for k in range(
            math.ceil(low - item.level), math.floor(high - item.level) + 1
        ):
            forms.append(HalfspaceForm(item.character, item.level + k))
            origins.append((i, k))
    logger.debug("Lift has %d hyperplanes meeting the unit cube", len(forms))
    return LiftedChunk(Arrangement(arrangement.dim, forms), origins)


@attr.s(frozen=True)
class LiftCheck:
    "Summary of a successful ``verify_lift_quotient``."

    n_pieces = attr.ib()
    n_faces = attr.ib()


def verify_lift_quotient(structure):
    """
    Cuts the lifted chunk with the facets of the unit cube, maps every piece
    lying in [0, 1)^d to the face of the torus containing it, and checks that
    this reaches every face exactly with its dimension.
    """
    dim = structure.dim
    chunk = lift(structure.arrangement)
    forms = list(chunk.arrangement.hyperplanes)
    for j in range(dim):
        unit = tuple(int(j == k) for k in range(dim))
        for b in (0, 1):
            facet = HalfspaceForm(unit, b)
            if facet not in forms:
                forms.append(facet)
    pieces = face_poset(Arrangement(dim, forms))

    top_dims = {}
    n_pieces = 0
    for piece in pieces:
        if not all(0 <= x < 1 for x in piece.witness):
            continue
        n_pieces += 1
        face = structure.face_at(piece.witness)
        top_dims[face] = max(top_dims.get(face, -1), piece.dim)

    if set(top_dims) != set(structure.faces):
        raise InternalVerificationError.for_check(
            "lift",
            oneline(
                f"""
            pieces of the unit cube reach {len(top_dims)} of
            {len(structure.faces)} faces"""
            ),
        )
    for face, top in top_dims.items():
        if top != structure.face_dim(face):
            raise InternalVerificationError.for_check(
                "lift",
                oneline(
                    f"""
                {structure.describe_face(face)} is covered by pieces of
                dimension at most {top}"""
                ),
            )
    logger.debug("%d cube pieces cover %d faces", n_pieces, len(top_dims))
    return LiftCheck(n_pieces=n_pieces, n_faces=len(top_dims))
