"""
The interface shared by the cell decompositions this package works with.

A face structure is a decomposition cut out by an arrangement (toric or
affine) presented through charts. Every face F has a central arrangement A[F],
the hyperplanes through F translated to the origin, which is an ordered
sub-list of the arrangement A_0 of all directions. A face of A[F] (a "local
face", written as a sign vector aligned with the items through F) selects the
face adjacent to F in that direction. Layers (or flats) carry the same local
data, and each has a restriction A^Y with coordinate maps.

Face categories, Salvetti categories, strata and colimit checks are written
once against this interface.
"""

import logging

import attr

from ..datatypes import LocalArrangement
from ..exception import InternalVerificationError
from ..hyperplane.arrangement import Arrangement
from ..hyperplane.faces import face_poset
from ..linalg.lattice import coordinates
from ..utils.misc import oneline

logger = logging.getLogger(__name__)


class FaceStructure:
    """
    Base class for face structures. Subclasses set ``dim``, ``directions``
    (the primitive normals of A_0) and ``item_directions`` (the index in A_0 of
    each item's normal) and implement the methods raising NotImplementedError.

    Face and layer keys are hashable and sortable.
    """

    def __init__(self, dim, directions, item_directions):
        self.dim = dim
        self.directions = tuple(tuple(d) for d in directions)
        self.item_directions = tuple(item_directions)
        self._local_face_posets = {}
        self._restrictions = {}

    def item_normal(self, item):
        return self.directions[self.item_directions[item]]

    def central_arrangement(self):
        "A_0: the central arrangement of all directions."
        return Arrangement.central(self.dim, self.directions)

    # Faces.

    @property
    def faces(self):
        raise NotImplementedError()

    def face_dim(self, face):
        raise NotImplementedError()

    def face_witness(self, face):
        raise NotImplementedError()

    def face_items(self, face):
        "The items through a face, sorted by direction."
        raise NotImplementedError()

    def face_at(self, point):
        "The face containing a point."
        raise NotImplementedError()

    def face_from_local(self, face, local_signs):
        "The face selected near ``face`` by a face of A[face]."
        raise NotImplementedError()

    def describe_face(self, face):
        return str(face)

    # Layers.

    @property
    def layers(self):
        raise NotImplementedError()

    def layer_dim(self, layer):
        raise NotImplementedError()

    def layer_items(self, layer):
        "The items containing a layer, sorted by direction."
        raise NotImplementedError()

    def layer_through(self, face, items):
        """
        The layer containing ``face`` cut out by some of the items through it.
        """
        raise NotImplementedError()

    def restriction(self, layer):
        "Returns the Restriction A^Y of a layer, memoized."
        if layer not in self._restrictions:
            self._restrictions[layer] = self._build_restriction(layer)
        return self._restrictions[layer]

    def _build_restriction(self, layer):
        raise NotImplementedError()

    def describe_layer(self, layer):
        return str(layer)

    # Generic operations.

    def local_arrangement(self, face):
        items = self.face_items(face)
        return LocalArrangement(
            base=face,
            items=items,
            directions=[self.item_directions[item] for item in items],
        )

    def layer_arrangement(self, layer):
        items = self.layer_items(layer)
        return LocalArrangement(
            base=layer,
            items=items,
            directions=[self.item_directions[item] for item in items],
        )

    def local_faces(self, local):
        """
        The FacePoset of the central arrangement of a LocalArrangement, whose
        sign vectors are aligned with ``local.items``. Memoized by directions.
        """
        key = local.directions
        if key not in self._local_face_posets:
            arrangement = Arrangement.central(
                self.dim, [self.directions[j] for j in key]
            )
            self._local_face_posets[key] = face_poset(arrangement)
        return self._local_face_posets[key]

    def contains(self, layer, face):
        "Whether a face lies in a layer."
        items = self.layer_items(layer)
        if not set(items) <= set(self.face_items(face)):
            return False
        return self.layer_through(face, items) == layer

    def f_vector(self):
        counts = [0] * (self.dim + 1)
        for face in self.faces:
            counts[self.face_dim(face)] += 1
        return tuple(counts)

    def euler_characteristic(self):
        return sum((-1) ** self.face_dim(face) for face in self.faces)

    def __repr__(self):
        return oneline(
            f"""
            {type(self).__name__}(dim={self.dim}, {len(self.item_directions)}
            items, {len(self.faces)} faces)"""
        )


@attr.s(frozen=True, eq=False)
class Restriction:
    """
    The restriction A^Y of a face structure to one of its layers.

    Attributes
    ----------
    layer: hashable
        The key of the layer Y.
    structure: FaceStructure
        The face structure of A^Y, of dimension dim Y.
    origin: tuple of Fraction
        A point of (a lift of) Y.
    basis: tuple of tuples of int
        Rows whose first ``structure.dim`` entries span the directions of Y;
        coordinates are taken with respect to all of them.
    """

    layer = attr.ib()
    structure = attr.ib()
    origin = attr.ib(converter=tuple)
    basis = attr.ib(converter=tuple)

    def _coordinates(self, vector):
        values = coordinates(vector, self.basis, len(self.origin))
        if values is None:
            raise InternalVerificationError.for_check(
                "restriction", f"{vector!r} is not in the span of the layer basis"
            )
        return values

    def point_coordinates(self, point):
        "Coordinates in A^Y of a point of (a translate of) the layer."
        offset = tuple(x - o for x, o in zip(point, self.origin))
        return tuple(self._coordinates(offset)[: self.structure.dim])

    def vector_coordinates(self, vector):
        "Coordinates in A^Y of a vector tangent to the layer."
        values = self._coordinates(vector)
        if any(values[self.structure.dim :]):
            raise InternalVerificationError.for_check(
                "restriction", f"{vector!r} is not tangent to the layer"
            )
        return tuple(values[: self.structure.dim])

    def face_of(self, ambient, face):
        "The face of A^Y containing a face of the ambient structure."
        witness = ambient.face_witness(face)
        return self.structure.face_at(self.point_coordinates(witness))
