"""
Layers of toric arrangements: the connected components of intersections of
subtori, each a translate of a subtorus.

A layer is keyed by the saturated lattice Gamma of characters vanishing on its
direction space (in Hermite normal form) together with the values mod 1 of
those characters on the layer. Two points lie on the same translate of the
subtorus exactly when every element of Gamma takes the same value mod 1 on
them, so the key is canonical.
"""

from fractions import Fraction
import itertools
import logging

import attr

from ..linalg.lattice import integer_kernel, saturation
from ..linalg.matrix import dot, int_matrix, mat_vec
from ..linalg.normal_forms import snf
from ..utils.misc import frac_mod1

logger = logging.getLogger(__name__)


TORUS_KEY = ((), ())


@attr.s(frozen=True)
class Layer:
    """
    A layer of a toric arrangement.

    Attributes
    ----------
    key: (tuple of tuples of int, tuple of Fraction)
        The lattice Gamma as Hermite rows and the values of its rows mod 1.
    dim: int
    point: tuple of Fraction
        A point of a lift of the layer to R^d.
    basis: tuple of tuples of int
        A basis of the integer points of the direction space.
    items: tuple of int
        Every item containing the layer, sorted by direction.
    """

    key = attr.ib()
    dim = attr.ib(eq=False)
    point = attr.ib(converter=tuple, eq=False)
    basis = attr.ib(converter=tuple, eq=False)
    items = attr.ib(converter=tuple, eq=False)

    @property
    def gamma(self):
        return self.key[0]

    def __str__(self):
        if not self.gamma:
            return "torus"
        rows = ",".join("(" + " ".join(str(x) for x in row) + ")" for row in self.gamma)
        values = ",".join(str(v) for v in self.key[1])
        return f"[{rows} @ {values}]"


def layer_key(generators, point, dim):
    """
    The key of the layer through ``point`` cut out by characters spanning the
    rational span of ``generators``.
    """
    gamma = saturation(generators, dim) if generators else ()
    return (gamma, tuple(frac_mod1(dot(row, point)) for row in gamma))


def closed_items(arrangement, point, basis):
    """
    The items containing the layer through ``point`` with direction lattice
    ``basis``, sorted by direction.
    """
    items = []
    for i, item in enumerate(arrangement.items):
        if any(dot(item.character, w) for w in basis):
            continue
        if (dot(item.character, point) - item.level).denominator == 1:
            items.append(i)
    directions = arrangement.item_directions
    return tuple(sorted(items, key=lambda i: directions[i]))


def components(arrangement, items):
    """
    Computes the connected components of the intersection of the given items
    as Layers. The intersection is empty exactly when no component is
    returned.
    """
    dim = arrangement.dim
    if not items:
        return [torus_layer(arrangement)]
    characters = [arrangement.items[i].character for i in items]
    levels = [arrangement.items[i].level for i in items]

    # Solve A x = levels mod Z^m through U A V = D, x = V y.
    result = snf(int_matrix(characters, dim))
    U = result.U.tolist()
    V = result.V.tolist()
    factors = result.invariant_factors()
    r = len(factors)
    shifted = mat_vec(U, levels)
    if any(Fraction(value).denominator != 1 for value in shifted[r:]):
        return []

    basis = integer_kernel(characters, dim)
    found = {}
    for residues in itertools.product(*(range(f) for f in factors)):
        y = [
            (Fraction(shifted[j]) + residues[j]) / factors[j] for j in range(r)
        ] + [Fraction(0)] * (dim - r)
        point = tuple(frac_mod1(x) for x in mat_vec(V, y))
        key = layer_key(characters, point, dim)
        if key in found:
            continue
        found[key] = Layer(
            key=key,
            dim=len(basis),
            point=point,
            basis=basis,
            items=closed_items(arrangement, point, basis),
        )
    return list(found.values())


def torus_layer(arrangement):
    dim = arrangement.dim
    origin = tuple(Fraction(0) for _ in range(dim))
    basis = tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))
    return Layer(key=TORUS_KEY, dim=dim, point=origin, basis=basis, items=())


def layer_contains(big, small):
    "Whether the layer ``small`` is contained in the layer ``big``."
    gamma, values = big.key
    return all(
        frac_mod1(dot(row, small.point)) == value for row, value in zip(gamma, values)
    ) and set(big.items) <= set(small.items)


@attr.s(frozen=True, eq=False)
class LayerPoset:
    """
    The layers of a toric arrangement ordered by reverse inclusion, sorted by
    decreasing dimension (the torus first) and then by key.
    """

    arrangement = attr.ib()
    layer_list = attr.ib(converter=tuple)
    _by_key = attr.ib(init=False)

    def __attrs_post_init__(self):
        object.__setattr__(
            self, "_by_key", {layer.key: layer for layer in self.layer_list}
        )

    def __len__(self):
        return len(self.layer_list)

    def __iter__(self):
        return iter(self.layer_list)

    def __getitem__(self, key):
        return self._by_key[key]

    def __contains__(self, key):
        return key in self._by_key

    @property
    def dim(self):
        return self.arrangement.dim

    @property
    def layers(self):
        return tuple(layer.key for layer in self.layer_list)

    def layer_dim(self, key):
        return self._by_key[key].dim

    def layer_items(self, key):
        return self._by_key[key].items

    def item_normal(self, item):
        return self.arrangement.items[item].character

    def vertices(self):
        return [layer for layer in self.layer_list if layer.dim == 0]

    def leq(self, X, Y):
        "Reverse inclusion: X <= Y iff Y is contained in X."
        return layer_contains(self._by_key[X], self._by_key[Y])

    def counts(self):
        "The number of layers in each dimension 0, ..., dim."
        counts = [0] * (self.dim + 1)
        for layer in self.layer_list:
            counts[layer.dim] += 1
        return tuple(counts)


def layer_poset(arrangement):
    """
    Enumerates every layer, starting from the torus and intersecting each layer
    with the items not containing it.
    """
    torus = torus_layer(arrangement)
    found = {torus.key: torus}
    queue = [torus]
    while queue:
        layer = queue.pop(0)
        for i in range(len(arrangement)):
            if i in layer.items:
                continue
            for component in components(arrangement, layer.items + (i,)):
                if component.key in found or not layer_contains(layer, component):
                    continue
                found[component.key] = component
                queue.append(component)
    layers = sorted(found.values(), key=lambda layer: (-layer.dim, layer.key))
    logger.debug("Found %d layers", len(layers))
    return LayerPoset(arrangement, layers)
