"""
Integral homology of chain complexes through Smith normal forms.
"""

import logging

import attr
import numpy as np

from ..datatypes import HomologyGroup
from ..exception import InternalVerificationError
from ..linalg.normal_forms import invariant_factors
from ..utils.misc import oneline

logger = logging.getLogger(__name__)


def check_boundaries(chains):
    "Checks that every composite of two consecutive boundary maps is zero."
    for k in range(1, len(chains.boundaries) - 1):
        lower, upper = chains.boundary(k), chains.boundary(k + 1)
        if lower.shape[0] == 0 or upper.shape[1] == 0:
            continue
        if np.any(lower.dot(upper) != 0):
            raise InternalVerificationError.for_check(
                "boundary",
                f"boundary maps of degrees {k} and {k + 1} do not compose to zero",
            )


def homology(chains):
    """
    Computes H_0, ..., H_max_deg of a chain complex: the Betti number
    dim ker d_k - rank d_{k+1} and the invariant factors of d_{k+1} above one.
    """
    check_boundaries(chains)
    factors = [invariant_factors(matrix) for matrix in chains.boundaries]
    factors.append([])

    groups = []
    for k in range(min(chains.max_deg, len(chains.bases) - 1) + 1):
        rank_out = len(factors[k])
        rank_in = len(factors[k + 1])
        betti = chains.rank(k) - rank_out - rank_in
        torsion = [f for f in factors[k + 1] if f > 1]
        groups.append(HomologyGroup(degree=k, betti=betti, torsion=torsion))
    logger.debug("Homology %s", ", ".join(str(group) for group in groups))
    return groups


def betti_numbers(groups):
    return tuple(group.betti for group in groups)


@attr.s(frozen=True)
class TorsionReport:
    """
    Whether a list of homology groups is torsion free, with the offending
    degrees and their invariant factors otherwise.
    """

    torsion_free = attr.ib()
    offending = attr.ib(converter=tuple, default=())


def torsion_free_check(groups):
    offending = [(group.degree, group.torsion) for group in groups if group.torsion]
    return TorsionReport(torsion_free=not offending, offending=offending)


def check_euler_characteristic(chains, category):
    """
    Checks that the Euler characteristic of an untruncated nerve equals the
    alternating count of the objects of the category by rank.
    """
    if chains.truncated:
        return None
    expected = sum((-1) ** rank for rank in category.ranks.values())
    actual = chains.euler_characteristic()
    if actual != expected:
        raise InternalVerificationError.for_check(
            "euler",
            oneline(
                f"""
            the nerve of {category.name} has Euler characteristic {actual};
            its objects give {expected}"""
            ),
        )
    return actual
