"""
Perfect acyclic matchings on Salvetti categories, assembled stratum by stratum
and glued along the total order of the strata.
"""

import logging

import attr

from ..config import DEFAULT_CONFIG
from ..datatypes import Polynomial
from ..exception import InternalVerificationError
from ..homology.poincare import poincare_toric
from ..utils.misc import oneline
from .matching import patchwork
from .search import fiber_matching_one_critical
from .torus import torus_matching

logger = logging.getLogger(__name__)


@attr.s(frozen=True)
class SalvettiMatching:
    """
    A matching of a Salvetti category with the matchings of its strata.

    Attributes
    ----------
    certificate: MatchingCertificate
        The glued matching.
    strata: tuple of MatchingCertificate
        One certificate per stratum, for the stratum as a full subcategory.
    used_fallback: bool
        Whether some torus matching had to search its face category directly.
    """

    certificate = attr.ib()
    strata = attr.ib(converter=tuple)
    used_fallback = attr.ib(default=False)


def _glue(stratification, stratum_matchings):
    positions = stratification.positions()
    return patchwork(
        stratification.category,
        positions,
        lambda a, b: a <= b,
        dict(enumerate(stratum_matchings)),
    )


def salvetti_matching(stratification, config=DEFAULT_CONFIG):
    """
    Matches a toric Salvetti category: the torus matching of each restriction
    A^Y is carried to N_y through the isomorphism N_y = F(A^Y)^op, and the
    results are glued. The critical census must equal the coefficients of the
    Poincaré polynomial.
    """
    structure = stratification.structure
    matchings = []
    certificates = []
    used_fallback = False
    for stratum in stratification.strata:
        torus = torus_matching(
            stratum.restriction.structure, stratum.restricted_category, config
        )
        used_fallback = used_fallback or torus.used_fallback
        inverse = {
            image: m for m, image in stratum.isomorphism.morphism_map.items()
        }
        matching = frozenset(inverse[m] for m in torus.certificate.matching)
        matchings.append(matching)
        certificates.append(torus.certificate)

    certificate = _glue(stratification, matchings)
    check_census(certificate, poincare_toric(structure))
    logger.info("Salvetti matching has critical census %s", certificate.census)
    return SalvettiMatching(certificate, certificates, used_fallback)


def affine_salvetti_matching(stratification, config=DEFAULT_CONFIG):
    """
    Matches the Salvetti category of an affine arrangement: every stratum gets
    a matching with one critical object in its lowest rank, and the results
    are glued.
    """
    matchings = []
    certificates = []
    for stratum in stratification.strata:
        certificate = fiber_matching_one_critical(
            stratum.category, rank=stratum.codim, config=config
        )
        matchings.append(certificate.matching)
        certificates.append(certificate)
    certificate = _glue(stratification, matchings)
    logger.info("Salvetti matching has critical census %s", certificate.census)
    return SalvettiMatching(certificate, certificates)


def check_census(certificate, polynomial):
    """
    Checks that a matching has as many critical objects in each rank as the
    coefficients of a Poincaré polynomial.
    """
    if Polynomial(certificate.census) != polynomial:
        raise InternalVerificationError.for_check(
            "census",
            oneline(
                f"""
            matching has critical census {certificate.census}; the
            Poincaré polynomial is {polynomial}"""
            ),
        )
