"""
Normalized chains on the nerve of a finite acyclic category.

A k-simplex of the nerve is a chain x_0 -> x_1 -> ... -> x_k of k composable
non-identity morphisms. In an acyclic category no composite of non-identities
is an identity, so every face of a nondegenerate simplex is nondegenerate and
the normalized complex is spanned by these chains.
"""

import logging

import attr

from ..linalg.matrix import int_matrix

logger = logging.getLogger(__name__)


@attr.s(frozen=True, eq=False)
class ChainComplex:
    """
    The chain complex of a nerve, truncated above ``max_deg + 1``.

    Attributes
    ----------
    bases: tuple of tuples
        ``bases[k]`` lists the k-simplices: objects for k = 0, tuples of
        composable morphisms otherwise.
    boundaries: tuple of IntMatrix
        ``boundaries[k]`` is the boundary map from degree k to degree k - 1,
        with one column per k-simplex; ``boundaries[0]`` has no rows.
    max_deg: int
        The highest degree whose homology the complex determines.
    truncated: bool
        Whether simplices exist above the last stored degree.
    """

    bases = attr.ib(converter=tuple)
    boundaries = attr.ib(converter=tuple)
    max_deg = attr.ib()
    truncated = attr.ib(default=False)

    def rank(self, k):
        "The number of k-simplices."
        return len(self.bases[k]) if k < len(self.bases) else 0

    def boundary(self, k):
        return self.boundaries[k]

    def euler_characteristic(self):
        return sum((-1) ** k * len(basis) for k, basis in enumerate(self.bases))


def _faces(category, chain):
    """
    The faces of a k-simplex given as a tuple of morphisms, with the index of
    each face map.
    """
    k = len(chain)
    if k == 1:
        (m,) = chain
        return [(0, m.target), (1, m.source)]
    faces = [(0, chain[1:])]
    for i in range(1, k):
        composite = category.compose(chain[i - 1], chain[i])
        faces.append((i, chain[: i - 1] + (composite,) + chain[i + 1 :]))
    faces.append((k, chain[:-1]))
    return faces


def nerve_chain_complex(category, max_deg=None):
    """
    Builds the simplices of the nerve of ``category`` up to degree
    ``max_deg + 1`` and the boundary matrices between them. ``max_deg``
    defaults to the height of the category, which yields every simplex.
    """
    if max_deg is None:
        max_deg = category.height

    bases = [tuple(category.objects)]
    chains = [(m,) for m in category.morphisms]
    while chains and len(bases) <= max_deg + 1:
        bases.append(tuple(chains))
        chains = [
            chain + (m,)
            for chain in chains
            for m in category.morphisms_from(chain[-1].target)
        ]
    truncated = bool(chains)

    boundaries = [int_matrix([], len(bases[0]))]
    for k in range(1, len(bases)):
        index = {simplex: row for row, simplex in enumerate(bases[k - 1])}
        rows = [[0] * len(bases[k]) for _ in bases[k - 1]]
        for column, chain in enumerate(bases[k]):
            for i, face in _faces(category, chain):
                rows[index[face]][column] += (-1) ** i
        boundaries.append(int_matrix(rows, len(bases[k])))

    logger.debug(
        "Nerve of %s has simplex counts %s",
        category.name,
        tuple(len(basis) for basis in bases),
    )
    return ChainComplex(bases, boundaries, max_deg, truncated)
