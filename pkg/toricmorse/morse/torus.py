"""
Perfect acyclic matchings on the face category of a torus decomposition.

A vertex with d independent items through it defines a functor from the face
category to the Boolean poset of subsets of those items: a face goes to the
set of chosen items containing it. Each fiber gets a matching with one
critical object in its top rank, and the Patchwork construction glues them
into a matching with binomial(d, k) critical faces of dimension k.
"""

import itertools
import logging
import math

import attr

from ..config import DEFAULT_CONFIG
from ..datatypes import AdaptedBasis
from ..exception import InternalVerificationError, MatchingSearchError
from ..linalg.lattice import adapted_basis, integer_kernel
from ..linalg.matrix import determinant
from ..utils.misc import groups_dict, oneline
from .matching import patchwork, validate_matching
from .search import fiber_matching_one_critical, search_matching

logger = logging.getLogger(__name__)


@attr.s(frozen=True)
class TorusMatching:
    """
    A perfect matching of a torus face category with its fibration data.

    Attributes
    ----------
    certificate: MatchingCertificate
    vertex: layer key or None
        The vertex whose items define the fibration.
    items: tuple of int
        The d chosen items through the vertex.
    fibers: dict
        Maps each subset I (a frozenset of positions in ``items``) to its
        fiber's MatchingCertificate.
    basis: AdaptedBasis or None
        A basis adapted to the chain of lattices cut out by the chosen items.
    pairings: tuple of int
        The pairings <u_i, alpha_i>, all positive.
    used_fallback: bool
        Whether a fiber had no one-critical matching, so that the whole
        category was searched directly.
    """

    certificate = attr.ib()
    vertex = attr.ib()
    items = attr.ib(converter=tuple)
    fibers = attr.ib()
    basis = attr.ib()
    pairings = attr.ib(converter=tuple)
    used_fallback = attr.ib(default=False)


def binomial_census(dim):
    return tuple(math.comb(dim, k) for k in range(dim + 1))


def choose_vertex(structure):
    """
    Picks a vertex and d items through it with independent characters,
    preferring items whose characters form a unimodular matrix.
    """
    d = structure.dim
    characters = [item.character for item in structure.arrangement.items]
    fallback = None
    for vertex in structure.layer_poset.vertices():
        for items in itertools.combinations(vertex.items, d):
            det = determinant([characters[i] for i in items])
            if abs(det) == 1:
                return vertex.key, items
            if det != 0 and fallback is None:
                fallback = (vertex.key, items)
    if fallback is None:
        raise InternalVerificationError.for_check(
            "torus", "no vertex has d independent items through it"
        )
    return fallback


def fibration_basis(alphas):
    """
    A basis u_1, ..., u_d adapted to the chain of lattices
    L_j = {x in Z^d : <alpha_i, x> = 0 for i > j}, with each u_j flipped so
    that <u_j, alpha_j> > 0. Returns the basis and the pairings.
    """
    d = len(alphas)
    chain = [integer_kernel(alphas[j:], d) for j in range(1, d + 1)]
    basis = adapted_basis(chain, d)
    flipped = []
    for u, pairing in zip(basis.u, basis.pairings(alphas)):
        flipped.append(u if pairing > 0 else tuple(-x for x in u))
    basis = AdaptedBasis(u=flipped, prefix_ranks=basis.prefix_ranks)
    return basis, basis.pairings(alphas)


def torus_matching(structure, category, config=DEFAULT_CONFIG):
    """
    Builds a perfect acyclic matching on the face category of a toric face
    structure and checks its census against the Betti numbers of the torus.
    """
    d = structure.dim
    expected = binomial_census(d)
    if d == 0:
        certificate = validate_matching(category, ())
        return TorusMatching(certificate, None, (), {}, None, ())

    vertex, items = choose_vertex(structure)
    alphas = [structure.arrangement.items[i].character for i in items]
    basis, pairings = fibration_basis(alphas)

    def fibration(face):
        through = set(structure.face_items(face))
        return frozenset(j for j, item in enumerate(items) if item in through)

    phi = {face: fibration(face) for face in category.objects}
    fibers = {}
    used_fallback = False
    try:
        for subset, members in groups_dict(category.objects, phi.get).items():
            fiber = category.full_subcategory(members, name="torus fiber")
            fibers[subset] = fiber_matching_one_critical(fiber, config=config)
        certificate = patchwork(
            category,
            phi,
            lambda I, J: I >= J,
            {subset: cert.matching for subset, cert in fibers.items()},
        )
    except MatchingSearchError as e:
        logger.info("Searching the whole face category directly: %s", e)
        used_fallback = True
        certificate = search_matching(category, expected, config)

    if certificate.census != expected:
        raise InternalVerificationError.for_check(
            "torus",
            oneline(
                f"""
            torus matching has critical census {certificate.census};
            expected {expected}"""
            ),
        )
    logger.debug("Torus matching with census %s", certificate.census)
    return TorusMatching(
        certificate=certificate,
        vertex=vertex,
        items=items,
        fibers=fibers,
        basis=basis,
        pairings=pairings,
        used_fallback=used_fallback,
    )
