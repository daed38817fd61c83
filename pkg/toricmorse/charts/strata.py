"""
The stratification of the Salvetti category of a face structure.

A linear extension of the poset of regions of A_0 induces region orders on
every local arrangement. They define the set Y of pairs y = (Y, C), with Y a
layer and C a chamber of A[Y] whose flat X(Y, C) is all of A[Y]; the map
theta from Salvetti objects onto Y; and the strata N_y, each isomorphic to
the opposite of the face category of the restriction A^Y.
"""

import logging

import attr
import networkx as nx

from ..config import DEFAULT_CONFIG
from ..datatypes import Morphism
from ..exception import (
    FaceNotInLayerError,
    InputError,
    InternalVerificationError,
)
from ..hyperplane.arrangement import Arrangement, intersection_poset
from ..hyperplane.faces import face_poset
from ..hyperplane.nbc import local_nbc
from ..hyperplane.regions import induced_order, mu, order_chambers, x_c
from ..linalg.matrix import dot
from ..morse.category import check_isomorphism
from ..utils.misc import format_signs, groups_dict, oneline, parse_signs, sign
from .categories import face_category, salvetti_category

logger = logging.getLogger(__name__)


def base_order(structure, config=DEFAULT_CONFIG):
    """
    The RegionOrder of A_0 selected by the configuration: based at
    ``config.base_chamber`` (default: the lexicographically least chamber),
    following ``config.region_extension`` when given.
    """
    faces = face_poset(structure.central_arrangement())
    chambers = [face.signs for face in faces.chambers()]
    try:
        base = None
        if config.base_chamber is not None:
            base = parse_signs(config.base_chamber)
        extension = None
        if config.region_extension is not None:
            extension = [parse_signs(s) for s in config.region_extension]
    except ValueError as e:
        raise InputError(str(e)) from e
    return order_chambers(chambers, base, extension)


class LocalOrders:
    """
    The region orders induced by a base order on local arrangements, and the
    flats of those arrangements. Local arrangements are identified by their
    tuple of directions (indices into A_0); everything is memoized.
    """

    def __init__(self, structure, order):
        self.structure = structure
        self.base = order
        self._orders = {}
        self._closed_sets = {}
        self._mu = {}

    def order(self, directions):
        directions = tuple(directions)
        if directions not in self._orders:
            self._orders[directions] = induced_order(directions, self.base)
        return self._orders[directions]

    def closed_sets(self, directions):
        directions = tuple(directions)
        if directions not in self._closed_sets:
            arrangement = Arrangement.central(
                self.structure.dim,
                [self.structure.directions[j] for j in directions],
            )
            self._closed_sets[directions] = [
                frozenset(flat.closed) for flat in intersection_poset(arrangement).flats
            ]
        return self._closed_sets[directions]

    def flat_of_chamber(self, directions, chamber):
        "X(., C): the positions of the flat X_C of a local chamber."
        return x_c(self.order(directions), chamber, self.closed_sets(directions))

    def xi0(self, directions, chamber):
        "The first chamber of A_0 inside a chamber of a local arrangement."
        directions = tuple(directions)
        if directions not in self._mu:
            self._mu[directions] = mu(directions, self.base)
        return self._mu[directions][tuple(chamber)]


@attr.s(frozen=True)
class YElement:
    "A pair (Y, C) with X(Y, C) = Y."

    layer = attr.ib()
    chamber = attr.ib(converter=tuple)


def y_set(structure, orders):
    """
    Enumerates Y, sorted by the total order: first by the position of
    xi_0(y) in the base order, then by the dimension and key of the layer.
    """
    elements = []
    for layer in structure.layers:
        local = structure.layer_arrangement(layer)
        everything = frozenset(range(len(local)))
        for chamber in structure.local_faces(local).chambers():
            if orders.flat_of_chamber(local.directions, chamber.signs) == everything:
                elements.append(YElement(layer, chamber.signs))

    def key(y):
        directions = structure.layer_arrangement(y.layer).directions
        return (
            orders.base.index(orders.xi0(directions, y.chamber)),
            structure.layer_dim(y.layer),
            y.layer,
        )

    elements.sort(key=key)
    logger.debug("Y has %d elements", len(elements))
    return elements


def theta(structure, orders, obj):
    """
    Maps a Salvetti object (F, c) to (Y, c restricted to A[Y]), where Y is the
    layer through F cut out by the flat X(F, c) of A[F].
    """
    face, chamber = obj
    local = structure.local_arrangement(face)
    positions = sorted(orders.flat_of_chamber(local.directions, chamber))
    items = [local.items[k] for k in positions]
    layer = structure.layer_through(face, items)
    return YElement(layer, tuple(chamber[k] for k in positions))


def xi(structure, orders, face, y):
    """
    xi_F(y): the chamber of A[F] first in the induced order among those
    inside the chamber y.chamber of A[Y].
    """
    if not structure.contains(y.layer, face):
        raise FaceNotInLayerError(
            oneline(
                f"""
            {structure.describe_face(face)} is not contained in
            {structure.describe_layer(y.layer)}"""
            )
        )
    local = structure.local_arrangement(face)
    positions = [local.position_of_item(i) for i in structure.layer_items(y.layer)]
    return mu(positions, orders.order(local.directions))[y.chamber]


@attr.s(frozen=True, eq=False)
class Stratum:
    """
    The stratum N_y of an element y of Y.

    Attributes
    ----------
    element: YElement
    objects: tuple
        The Salvetti objects of N_y.
    category: AcyclicCategory
        N_y as a full subcategory of the Salvetti category.
    restriction: Restriction
        The restriction A^Y.
    restricted_category: AcyclicCategory
        The face category of A^Y.
    isomorphism: CategoryIsomorphism
        The verified isomorphism from N_y onto the opposite of
        ``restricted_category``.
    """

    element = attr.ib()
    objects = attr.ib(converter=tuple)
    category = attr.ib()
    restriction = attr.ib()
    restricted_category = attr.ib()
    isomorphism = attr.ib()

    @property
    def codim(self):
        "The lowest rank in the stratum, the codimension of its layer."
        return min(self.category.ranks.values())


@attr.s(frozen=True, eq=False)
class Stratification:
    """
    The strata N_y of a Salvetti category, in the total order of Y.

    Attributes
    ----------
    structure: FaceStructure
    category: AcyclicCategory
        The Salvetti category.
    orders: LocalOrders
    elements: tuple of YElement
    theta: dict
        Maps each Salvetti object to its YElement.
    strata: tuple of Stratum
    """

    structure = attr.ib()
    category = attr.ib()
    orders = attr.ib()
    elements = attr.ib(converter=tuple)
    theta = attr.ib()
    strata = attr.ib(converter=tuple)

    @property
    def base_order(self):
        return self.orders.base

    def positions(self):
        return {
            obj: i for i, stratum in enumerate(self.strata) for obj in stratum.objects
        }

    def y_counts(self):
        "The number of elements of Y whose layer has dimension 0, ..., d."
        counts = [0] * (self.structure.dim + 1)
        for y in self.elements:
            counts[self.structure.layer_dim(y.layer)] += 1
        return tuple(counts)


def stratify(structure, category=None, config=DEFAULT_CONFIG):
    """
    Builds Y, theta and the strata of the Salvetti category, verifying that
    the strata partition the category and that each N_y is isomorphic to the
    opposite of the face category of A^Y.
    """
    if category is None:
        category = salvetti_category(structure)
    orders = LocalOrders(structure, base_order(structure, config))
    elements = y_set(structure, orders)
    known = set(elements)

    theta_map = {}
    for obj in category.objects:
        y = theta(structure, orders, obj)
        if y not in known:
            raise InternalVerificationError.for_check(
                "theta",
                oneline(
                    f"""
                object ({structure.describe_face(obj[0])},
                {format_signs(obj[1])}) is sent outside Y"""
                ),
            )
        theta_map[obj] = y

    graph = category.digraph()
    preimages = groups_dict(category.objects, theta_map.get)
    covered = set()
    strata = []
    for y in elements:
        roots = preimages.get(y, [])
        closure = set(roots)
        for root in roots:
            closure.update(nx.ancestors(graph, root))
        block = [obj for obj in category.objects if obj in closure - covered]
        covered.update(closure)
        strata.append(_build_stratum(structure, category, y, block))

    if len(covered) != len(category.objects):
        raise InternalVerificationError.for_check(
            "strata", "the strata do not cover the Salvetti category"
        )
    logger.info(
        "Split %d Salvetti objects into %d strata", len(category.objects), len(strata)
    )
    return Stratification(
        structure=structure,
        category=category,
        orders=orders,
        elements=elements,
        theta=theta_map,
        strata=strata,
    )


def _build_stratum(structure, category, y, block):
    restriction = structure.restriction(y.layer)
    sub = restriction.structure
    restricted_category = face_category(sub)

    def fail(detail):
        raise InternalVerificationError.for_check(
            "strata",
            f"stratum of {structure.describe_layer(y.layer)}: {detail}",
        )

    object_map = {}
    for obj in block:
        face = obj[0]
        if not structure.contains(y.layer, face):
            fail(f"{structure.describe_face(face)} is not in the layer")
        image = restriction.face_of(structure, face)
        if category.ranks[obj] != structure.dim - sub.face_dim(image):
            fail("ranks are not reversed")
        object_map[obj] = image

    stratum_category = category.full_subcategory(block, name="N_y")
    morphism_map = {}
    for m in stratum_category.morphisms:
        local = structure.local_arrangement(m.target[0])
        direction = structure.local_faces(local)[m.tag].witness
        direction = restriction.vector_coordinates(direction)
        source = object_map[m.target]
        tag = tuple(
            sign(dot(sub.item_normal(item), direction))
            for item in sub.face_items(source)
        )
        morphism_map[m] = Morphism(source, object_map[m.source], tag)

    isomorphism = check_isomorphism(
        stratum_category,
        restricted_category,
        object_map,
        morphism_map,
        opposite=True,
    )
    return Stratum(
        element=y,
        objects=block,
        category=stratum_category,
        restriction=restriction,
        restricted_category=restricted_category,
        isomorphism=isomorphism,
    )


def verify_xi(stratification):
    """
    Checks, for every face F, that xi_F is a bijection from the elements of Y
    whose layer contains F onto the chambers of A[F], that theta inverts it,
    and that it carries the total order of Y to the induced order of A[F].
    """
    structure = stratification.structure
    orders = stratification.orders
    for face in structure.faces:
        local = structure.local_arrangement(face)
        order = orders.order(local.directions)
        chambers = {c.signs for c in structure.local_faces(local).chambers()}
        elements = [
            y for y in stratification.elements if structure.contains(y.layer, face)
        ]
        images = [xi(structure, orders, face, y) for y in elements]

        if len(set(images)) != len(images) or set(images) != chambers:
            raise InternalVerificationError.for_check(
                "xi",
                f"xi is not a bijection at {structure.describe_face(face)}",
            )
        for y, chamber in zip(elements, images):
            if theta(structure, orders, (face, chamber)) != y:
                raise InternalVerificationError.for_check(
                    "xi",
                    oneline(
                        f"""
                    theta does not invert xi at {structure.describe_face(face)},
                    chamber {format_signs(chamber)}"""
                    ),
                )
        indices = [order.index(chamber) for chamber in images]
        if indices != sorted(indices):
            raise InternalVerificationError.for_check(
                "xi",
                f"xi does not preserve the order at {structure.describe_face(face)}",
            )


def verify_y_counts(stratification):
    """
    Checks that Y has as many elements with a layer of dimension i as there
    are local no-broken-circuit sets of size d - i.
    """
    structure = stratification.structure
    nbc_counts = local_nbc(structure).counts
    y_counts = stratification.y_counts()
    d = structure.dim
    expected = tuple(nbc_counts[d - i] for i in range(d + 1))
    if y_counts != expected:
        raise InternalVerificationError.for_check(
            "y_counts",
            f"Y has layer dimensions {y_counts}; local NBC sets give {expected}",
        )
    return y_counts
