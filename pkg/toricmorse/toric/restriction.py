"""
Restriction of a toric arrangement to one of its layers.
"""

import logging

from ..linalg.lattice import content, normalize_sign
from ..linalg.matrix import dot
from ..utils.misc import frac_mod1
from .arrangement import ToricArrangement, ToricItem

logger = logging.getLogger(__name__)


def restrict(arrangement, layer):
    """
    The toric arrangement A^Y induced on a layer Y by the items not containing
    it, in the coordinates t of Y = {point + sum t_j basis_j}.

    An item restricts to <beta, t> = level - <alpha, point> with
    beta_j = <alpha, basis_j>; items with beta = 0 miss Y. A non-primitive
    beta = m beta' describes the m subtori <beta', t> = (level + j) / m.
    """
    items = []
    for i, item in enumerate(arrangement.items):
        if i in layer.items:
            continue
        beta = tuple(dot(item.character, w) for w in layer.basis)
        if not any(beta):
            continue
        level = frac_mod1(item.level - dot(item.character, layer.point))
        m = content(beta)
        beta, flipped = normalize_sign(x // m for x in beta)
        for j in range(m):
            restricted_level = frac_mod1((level + j) / m)
            if flipped:
                restricted_level = frac_mod1(-restricted_level)
            restricted = ToricItem(beta, restricted_level)
            if restricted not in items:
                items.append(restricted)
    logger.debug(
        "Restriction to a %d-dimensional layer has %d items", layer.dim, len(items)
    )
    return ToricArrangement(layer.dim, items)
