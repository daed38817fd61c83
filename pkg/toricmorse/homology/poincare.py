"""
Poincaré polynomials of complements, from no-broken-circuit counts.
"""

import logging

from ..datatypes import Polynomial
from ..hyperplane.arrangement import intersection_poset
from ..hyperplane.nbc import local_nbc, nbc_of_normals

logger = logging.getLogger(__name__)


def poincare_hyperplane(arrangement):
    """
    The Poincaré polynomial of the complement of a complexified real
    arrangement: the sum over flats X of |nbc_{codim X}(A_X)| t^{codim X},
    where A_X is the central arrangement of the hyperplanes containing X. For
    a central arrangement this is the sum of |nbc_j| t^j.
    """
    poset = intersection_poset(arrangement)
    result = Polynomial((0,))
    for flat in poset.flats:
        codim = poset.codim(flat)
        normals = [arrangement.hyperplanes[i].alpha for i in flat.closed]
        count = len(nbc_of_normals(arrangement.dim, normals).graded(codim))
        result = result + Polynomial.monomial(codim, count)
    return result


def poincare_from_counts(counts, deficiency=0):
    """
    The sum of counts[j] (1 + t)^(d - j) t^j with d = len(counts) - 1,
    multiplied by (1 + t)^deficiency.
    """
    d = len(counts) - 1
    result = Polynomial((0,))
    for j, count in enumerate(counts):
        term = Polynomial.one_plus_t(d - j) * Polynomial.monomial(j, count)
        result = result + term
    return result * Polynomial.one_plus_t(deficiency)


def poincare_toric(layered, deficiency=0):
    """
    The Poincaré polynomial of the complement of a toric arrangement, from the
    local NBC sets of its layers. ``deficiency`` is the number of directions
    removed by essentialization, each contributing a factor (1 + t).
    """
    counts = local_nbc(layered).counts
    logger.debug("Local NBC counts %s", counts)
    return poincare_from_counts(counts, deficiency)
