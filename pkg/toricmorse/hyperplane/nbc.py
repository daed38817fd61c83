"""
No-broken-circuit sets, for whole arrangements and for the local arrangements
of the layers of a layered structure.
"""

import logging

import attr

from ..linalg.matrix import rank
from .arrangement import Arrangement

logger = logging.getLogger(__name__)


@attr.s(frozen=True)
class NBCFamily:
    """
    The no-broken-circuit sets of an ordered arrangement, as sorted tuples of
    hyperplane indices ordered by size and then lexicographically.
    """

    sets = attr.ib(converter=tuple)

    def __len__(self):
        return len(self.sets)

    def graded(self, size):
        return [s for s in self.sets if len(s) == size]

    @property
    def counts(self):
        counts = []
        for s in self.sets:
            while len(counts) <= len(s):
                counts.append(0)
            counts[len(s)] += 1
        return tuple(counts)


def nbc(arrangement):
    """
    Enumerates the NBC sets of an arrangement in its own hyperplane order. For
    an affine arrangement only sets with a nonempty intersection count, and
    broken circuits are taken among the hyperplanes through that intersection.

    A set {s_1 < ... < s_k} is NBC iff no hyperplane H_j with j < s_m contains
    the intersection of H_{s_m}, ..., H_{s_k}, for any m.
    """
    found = [()]
    frontier = [()]
    while frontier:
        extended = []
        for current in frontier:
            start = current[-1] + 1 if current else 0
            for i in range(start, len(arrangement)):
                candidate = current + (i,)
                if _is_nbc(arrangement, candidate):
                    extended.append(candidate)
        found.extend(extended)
        frontier = extended
    return NBCFamily(sorted(found, key=lambda s: (len(s), s)))


def _is_nbc(arrangement, indices):
    normals = [arrangement.hyperplanes[i].alpha for i in indices]
    if rank(normals, arrangement.dim) < len(indices):
        return False
    for m in range(len(indices)):
        flat = arrangement.flat(indices[m:])
        if flat is None:
            return False
        if any(j < indices[m] for j in flat.closed):
            return False
    return True


def nbc_of_normals(dim, normals):
    "The NBC sets of the central arrangement with the given ordered normals."
    return nbc(Arrangement.central(dim, normals))


@attr.s(frozen=True)
class LocalNBC:
    """
    The local NBC sets of a layered structure: pairs (layer, N) with N an NBC
    set of the local arrangement A[X] of size codim X.

    Attributes
    ----------
    dim: int
    entries: tuple of (layer key, tuple of item indices)
    """

    dim = attr.ib()
    entries = attr.ib(converter=tuple)

    @property
    def counts(self):
        "The number of entries in each codimension 0, ..., dim."
        counts = [0] * (self.dim + 1)
        for layer, items in self.entries:
            counts[len(items)] += 1
        return tuple(counts)


def local_nbc(layered):
    """
    Computes the local NBC sets of anything exposing ``dim``, ``layers``,
    ``layer_dim``, ``layer_items`` and ``item_normal``: for every layer X,
    the NBC sets of size codim X of the items through X, ordered as in A_0.
    """
    entries = []
    for layer in layered.layers:
        items = layered.layer_items(layer)
        codim = layered.dim - layered.layer_dim(layer)
        normals = [layered.item_normal(item) for item in items]
        for positions in nbc_of_normals(layered.dim, normals).graded(codim):
            entries.append((layer, tuple(items[k] for k in positions)))
    logger.debug("Found %d local NBC sets", len(entries))
    return LocalNBC(layered.dim, entries)
