"""
Finite arrangements of real affine hyperplanes with rational data, and their
intersection posets.
"""

from fractions import Fraction
import logging

import attr

from ..exception import ZeroCharacterError
from ..linalg.lattice import (
    coordinates,
    integer_kernel,
    integral_direction,
    normalize_sign,
)
from ..linalg.matrix import dot, rank, solve
from ..utils.misc import oneline, sign

logger = logging.getLogger(__name__)


def _fraction_vector(vector):
    return tuple(Fraction(x) for x in vector)


@attr.s(frozen=True)
class HalfspaceForm:
    """
    The hyperplane {x : <alpha, x> = b}, with positive side <alpha, x> > b.
    """

    alpha = attr.ib(converter=_fraction_vector)
    b = attr.ib(converter=Fraction, default=0)

    @alpha.validator
    def _check_alpha(self, attribute, value):
        if not any(value):
            raise ZeroCharacterError.for_vector(value)

    def value(self, point):
        return dot(self.alpha, point) - self.b

    def side(self, point):
        return sign(self.value(point))

    def normalized(self):
        """
        Rescales the form so that alpha is a primitive integer vector whose
        first nonzero entry is positive.
        """
        direction, factor = integral_direction(self.alpha)
        b = self.b * factor
        direction, flipped = normalize_sign(direction)
        if flipped:
            b = -b
        return HalfspaceForm(direction, b)

    @property
    def normal(self):
        "The primitive integer vector on the ray of alpha."
        return integral_direction(self.alpha)[0]


def normalize_forms(forms):
    """
    Normalizes a sequence of forms and drops repeated hyperplanes. Returns the
    distinct forms and, for each input form, the index of its representative.
    """
    unique = []
    index_of = {}
    mapping = []
    for form in forms:
        form = form.normalized()
        if form not in index_of:
            index_of[form] = len(unique)
            unique.append(form)
        mapping.append(index_of[form])
    return unique, mapping


@attr.s(frozen=True)
class Flat:
    """
    A nonempty intersection of hyperplanes of an arrangement.

    Attributes
    ----------
    closed: tuple of int
        The indices of every hyperplane containing the flat.
    point: tuple of Fraction
        A point of the flat.
    basis: tuple of tuples of int
        A basis of the integer points of the flat's direction space.
    """

    closed = attr.ib(converter=tuple)
    point = attr.ib(converter=tuple)
    basis = attr.ib(converter=tuple)

    @property
    def dim(self):
        return len(self.basis)

    def coordinates_of(self, point):
        "Coordinates of a point of the flat with respect to ``basis``."
        offset = tuple(x - p for x, p in zip(point, self.point))
        return coordinates(offset, self.basis, len(self.point))


@attr.s(frozen=True)
class Arrangement:
    """
    An ordered list of distinct hyperplanes in R^dim. The order is the one
    used by no-broken-circuit sets and by every sub-list taken from it.
    """

    dim = attr.ib()
    hyperplanes = attr.ib(converter=tuple)

    @hyperplanes.validator
    def _check_hyperplanes(self, attribute, value):
        for form in value:
            if len(form.alpha) != self.dim:
                raise ValueError(
                    oneline(
                        f"""
                    Hyperplane {form!r} does not live in dimension
                    {self.dim}"""
                    )
                )

    @classmethod
    def from_forms(cls, dim, forms):
        """
        Builds an arrangement from arbitrary forms, normalizing each one and
        dropping duplicates with a warning.
        """
        forms = list(forms)
        unique, _ = normalize_forms(forms)
        if len(unique) < len(forms):
            logger.warning(
                "Dropped %d repeated hyperplane(s)", len(forms) - len(unique)
            )
        return cls(dim, unique)

    @classmethod
    def central(cls, dim, normals):
        "The central arrangement of the hyperplanes orthogonal to ``normals``."
        return cls(dim, [HalfspaceForm(normal, 0) for normal in normals])

    def __len__(self):
        return len(self.hyperplanes)

    @property
    def normals(self):
        return tuple(form.normal for form in self.hyperplanes)

    @property
    def is_central(self):
        return all(form.b == 0 for form in self.hyperplanes)

    @property
    def rank(self):
        if not self.hyperplanes:
            return 0
        return rank([form.alpha for form in self.hyperplanes], self.dim)

    def sign_vector(self, point):
        return tuple(form.side(point) for form in self.hyperplanes)

    def subarrangement(self, indices):
        return Arrangement(self.dim, [self.hyperplanes[i] for i in indices])

    def solve(self, indices):
        """
        Returns a point on every hyperplane in ``indices``, or None if they do
        not intersect.
        """
        forms = [self.hyperplanes[i] for i in indices]
        return solve([f.alpha for f in forms], [f.b for f in forms], self.dim)

    def flat(self, indices):
        """
        Returns the Flat cut out by the given hyperplanes, or None if their
        intersection is empty.
        """
        indices = tuple(sorted(set(indices)))
        point = self.solve(indices)
        if point is None:
            return None
        normals = [self.hyperplanes[i].alpha for i in indices]
        base_rank = rank(normals, self.dim) if normals else 0
        closed = []
        for i, form in enumerate(self.hyperplanes):
            if form.value(point) != 0:
                continue
            if i in indices or rank(normals + [form.alpha], self.dim) == base_rank:
                closed.append(i)
        basis = integer_kernel([self.hyperplanes[i].normal for i in indices], self.dim)
        return Flat(closed=closed, point=point, basis=basis)

    def cuts(self, index, flat):
        "Whether hyperplane ``index`` meets ``flat`` in a proper subset."
        if index in flat.closed:
            return False
        alpha = self.hyperplanes[index].alpha
        return any(dot(alpha, w) != 0 for w in flat.basis)

    def restrict(self, flat):
        """
        Returns the arrangement A^X induced on a flat X, in the coordinates of
        ``flat.basis`` around ``flat.point``, together with a dict mapping the
        index of each hyperplane meeting X properly to its restricted index.
        """
        forms = []
        sources = []
        for i, form in enumerate(self.hyperplanes):
            if not self.cuts(i, flat):
                continue
            beta = tuple(dot(form.alpha, w) for w in flat.basis)
            forms.append(HalfspaceForm(beta, form.b - dot(form.alpha, flat.point)))
            sources.append(i)
        unique, mapping = normalize_forms(forms)
        index_map = dict(zip(sources, mapping))
        return Arrangement(flat.dim, unique), index_map


@attr.s(frozen=True, eq=False)
class IntersectionPoset:
    """
    The nonempty intersections of an arrangement, ordered by reverse inclusion.
    ``flats`` starts with the whole space and is sorted by codimension.
    """

    arrangement = attr.ib()
    flats = attr.ib(converter=tuple)
    _by_closed = attr.ib(init=False)

    def __attrs_post_init__(self):
        object.__setattr__(
            self, "_by_closed", {flat.closed: flat for flat in self.flats}
        )

    def __len__(self):
        return len(self.flats)

    def __getitem__(self, closed):
        return self._by_closed[tuple(closed)]

    def flat_of(self, indices):
        "The flat cut out by ``indices``, or None if they don't intersect."
        flat = self.arrangement.flat(indices)
        if flat is None:
            return None
        return self._by_closed[flat.closed]

    def leq(self, X, Y):
        return set(X.closed) <= set(Y.closed)

    def codim(self, flat):
        return self.arrangement.dim - flat.dim


def intersection_poset(arrangement):
    "Computes all nonempty intersections of the hyperplanes of an arrangement."
    whole = arrangement.flat(())
    found = {whole.closed: whole}
    queue = [whole]
    while queue:
        flat = queue.pop(0)
        for i in range(len(arrangement)):
            if i in flat.closed:
                continue
            smaller = arrangement.flat(flat.closed + (i,))
            if smaller is None or smaller.closed in found:
                continue
            found[smaller.closed] = smaller
            queue.append(smaller)
    flats = sorted(found.values(), key=lambda f: (-f.dim, len(f.closed), f.closed))
    logger.debug("Found %d flats", len(flats))
    return IntersectionPoset(arrangement, flats)
