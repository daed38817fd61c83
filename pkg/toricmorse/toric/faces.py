"""
The decomposition of the compact torus cut out by an essential toric
arrangement.

A face of the lifted (periodic) arrangement in R^d is determined by its
position vector: for each item i, 2k when the face lies on the lift
<alpha_i, x> = level_i + k, and 2k + 1 when it lies strictly between the lifts
k and k + 1. Translating by an integer vector lambda adds
2 <alpha_i, lambda> to every entry, so a face of the torus is an orbit of
position vectors; its key is the representative reduced modulo the lattice of
these translations in Hermite normal form.
"""

from fractions import Fraction
import logging
import math

from ..charts.structure import FaceStructure, Restriction
from ..exception import InternalVerificationError, NoCellStructureError
from ..linalg.lattice import complete_to_basis
from ..linalg.matrix import dot, int_matrix
from ..linalg.normal_forms import hnf
from ..utils.misc import frac_mod1, oneline
from .layers import layer_key, layer_poset
from .restriction import restrict

logger = logging.getLogger(__name__)


class ToricFaceStructure(FaceStructure):
    """
    The faces of the torus decomposition, their local arrangements and the
    layers of the arrangement.

    Faces are found around vertices: every face of an essential arrangement has
    a vertex in its closure, and the faces next to a vertex v correspond to the
    faces of its local arrangement A[v].
    """

    def __init__(self, arrangement):
        if arrangement.dim > 0 and (
            not len(arrangement) or not arrangement.is_essential
        ):
            raise NoCellStructureError.for_arrangement(
                arrangement.dim, len(arrangement), arrangement.rank
            )
        super(ToricFaceStructure, self).__init__(
            arrangement.dim, arrangement.directions, arrangement.item_directions
        )
        self.arrangement = arrangement
        self.layer_poset = layer_poset(arrangement)

        generators = [
            [2 * item.character[k] for item in arrangement.items]
            for k in range(arrangement.dim)
        ]
        self._translations = hnf(int_matrix(generators, len(arrangement)))

        self._faces = {}
        self._enumerate_faces()
        self._face_order = tuple(
            sorted(self._faces, key=lambda key: (self._faces[key][1], key))
        )
        logger.debug("Built %r", self)

    # Positions and keys.

    def _values(self, point):
        return [
            dot(item.character, point) - item.level for item in self.arrangement.items
        ]

    def _positions(self, point):
        positions = []
        for value in self._values(point):
            if value.denominator == 1:
                positions.append(2 * int(value))
            else:
                positions.append(2 * math.floor(value) + 1)
        return positions

    def _canonical(self, positions):
        "The key of a position vector and the translation bringing it there."
        if not self.arrangement.items:
            return (), (0,) * self.dim
        key, coefficients = self._translations.reduce(positions)
        U = self._translations.U
        translation = tuple(
            sum(c * U[k, j] for k, c in enumerate(coefficients))
            for j in range(self.dim)
        )
        return tuple(key), translation

    def _enumerate_faces(self):
        if self.dim == 0:
            self._faces[()] = ((), 0)
            return
        for vertex in self.layer_poset.vertices():
            local = self.layer_arrangement(vertex.key)
            for local_face in self.local_faces(local):
                point = self._step(vertex.point, local_face.witness)
                key, translation = self._canonical(self._positions(point))
                if key in self._faces:
                    continue
                witness = tuple(x - t for x, t in zip(point, translation))
                self._faces[key] = (witness, local_face.dim)

    def _step(self, point, direction):
        """
        Moves ``point`` along ``direction`` without reaching any lift of an
        item other than those through ``point``.
        """
        bounds = []
        for value, item in zip(self._values(point), self.arrangement.items):
            slope = dot(item.character, direction)
            if slope == 0:
                continue
            if value.denominator == 1:
                distance = 1
            else:
                distance = min(frac_mod1(value), 1 - frac_mod1(value))
            bounds.append(distance / abs(slope))
        epsilon = min(bounds) / 2 if bounds else Fraction(1, 2)
        return tuple(x + epsilon * w for x, w in zip(point, direction))

    # Faces.

    @property
    def faces(self):
        return self._face_order

    def face_dim(self, face):
        return self._faces[face][1]

    def face_witness(self, face):
        return self._faces[face][0]

    def face_items(self, face):
        directions = self.item_directions
        return tuple(
            sorted(
                (i for i, p in enumerate(face) if p % 2 == 0),
                key=lambda i: directions[i],
            )
        )

    def face_at(self, point):
        key, _ = self._canonical(self._positions(point))
        if key not in self._faces:
            raise InternalVerificationError.for_check(
                "faces", f"point {point!r} lies in an unknown face {key!r}"
            )
        return key

    def face_from_local(self, face, local_signs):
        positions = list(face)
        for item, s in zip(self.face_items(face), local_signs):
            positions[item] += s
        key, _ = self._canonical(positions)
        return key

    def describe_face(self, face):
        witness = ", ".join(str(frac_mod1(x)) for x in self.face_witness(face))
        return f"dim {self.face_dim(face)} face near ({witness})"

    # Layers.

    @property
    def layers(self):
        return self.layer_poset.layers

    def layer_dim(self, layer):
        return self.layer_poset.layer_dim(layer)

    def layer_items(self, layer):
        return self.layer_poset.layer_items(layer)

    def layer_through(self, face, items):
        characters = [self.arrangement.items[i].character for i in items]
        key = layer_key(characters, self.face_witness(face), self.dim)
        if key not in self.layer_poset:
            raise InternalVerificationError.for_check(
                "layers",
                oneline(
                    f"""
                items {tuple(items)!r} through {self.describe_face(face)}
                cut out an unknown layer"""
                ),
            )
        return key

    def describe_layer(self, layer):
        return str(self.layer_poset[layer])

    def _build_restriction(self, layer):
        data = self.layer_poset[layer]
        restricted = restrict(self.arrangement, data)
        return Restriction(
            layer=layer,
            structure=ToricFaceStructure(restricted),
            origin=data.point,
            basis=complete_to_basis(data.basis, self.dim),
        )
