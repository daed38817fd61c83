"""
Contains various data structures shared across toricmorse's subpackages.
"""

import attr


@attr.s(frozen=True, eq=False)
class SNFResult:
    """
    The Smith normal form of an integer matrix M.

    Attributes
    ----------
    U: IntMatrix
        A unimodular (rows x rows) matrix.
    D: IntMatrix
        A diagonal matrix with nonnegative entries d_1 | d_2 | ...
    V: IntMatrix
        A unimodular (cols x cols) matrix with U @ M @ V == D.
    """

    U = attr.ib()
    D = attr.ib()
    V = attr.ib()

    def invariant_factors(self):
        n_diag = min(self.D.shape)
        return [int(self.D[i, i]) for i in range(n_diag) if self.D[i, i] != 0]

    @property
    def rank(self):
        return len(self.invariant_factors())


@attr.s(frozen=True)
class AdaptedBasis:
    """
    A basis u_1, ..., u_d of Z^d adapted to a chain of sublattices.

    Attributes
    ----------
    u: tuple of tuples of int
        The basis vectors.
    prefix_ranks: tuple of int
        The rank of each lattice of the chain; the first ``prefix_ranks[j]``
        vectors of ``u`` span the j-th lattice.
    """

    u = attr.ib(converter=lambda vectors: tuple(tuple(v) for v in vectors))
    prefix_ranks = attr.ib(converter=tuple)

    def pairings(self, alphas):
        "Returns the integers l_i = <u_i, alpha_i>."
        return tuple(
            sum(a * b for a, b in zip(u_i, alpha_i))
            for u_i, alpha_i in zip(self.u, alphas)
        )


@attr.s(frozen=True)
class Morphism:
    """
    A non-identity morphism of an acyclic category.

    The tag distinguishes parallel morphisms; for posets it is None.
    """

    source = attr.ib()
    target = attr.ib()
    tag = attr.ib(default=None)

    def __repr__(self):
        return f"Morphism({self.source!r} -> {self.target!r}, {self.tag!r})"


@attr.s(frozen=True)
class LocalArrangement:
    """
    The central arrangement of the hyperplanes through a face or layer.

    Attributes
    ----------
    base: hashable
        The key of the face or layer.
    items: tuple of int
        Indices of the items (toric) or hyperplanes (affine) through the base.
    directions: tuple of int
        For each item, the index of its direction in A_0. Strictly increasing,
        so the local arrangement is an ordered sub-list of A_0.
    """

    base = attr.ib()
    items = attr.ib(converter=tuple)
    directions = attr.ib(converter=tuple)

    def __len__(self):
        return len(self.items)

    def position_of_item(self, item):
        return self.items.index(item)


@attr.s(frozen=True)
class MatchingCertificate:
    """
    A validated acyclic matching.

    Attributes
    ----------
    matching: frozenset of Morphism
        The matched indecomposable morphisms.
    linear_extension: tuple
        A linear extension of the category in which the source and target of
        every matched morphism are consecutive.
    critical: tuple
        The unmatched objects, in linear-extension order.
    census: tuple of int
        Number of critical objects in each rank 0, 1, ..., height.
    """

    matching = attr.ib(converter=frozenset)
    linear_extension = attr.ib(converter=tuple)
    critical = attr.ib(converter=tuple)
    census = attr.ib(converter=tuple)

    @property
    def n_critical(self):
        return sum(self.census)


@attr.s(frozen=True)
class HomologyGroup:
    """
    An integral homology group Z^betti + torsion.

    Attributes
    ----------
    degree: int
    betti: int
    torsion: tuple of int
        Invariant factors greater than one, forming a divisibility chain.
    """

    degree = attr.ib()
    betti = attr.ib()
    torsion = attr.ib(converter=tuple, default=())

    def __str__(self):
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts.extend(f"Z/{factor}" for factor in self.torsion)
        return " + ".join(parts) if parts else "0"


def _trim(coefficients):
    coefficients = [int(c) for c in coefficients]
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


@attr.s(frozen=True)
class Polynomial:
    """
    An integer polynomial, stored as its coefficients by degree with trailing
    zeros trimmed.
    """

    coefficients = attr.ib(converter=_trim)

    @classmethod
    def one_plus_t(cls, power=1):
        result = cls((1,))
        for _ in range(power):
            result = result * cls((1, 1))
        return result

    @classmethod
    def monomial(cls, degree, coefficient=1):
        return cls((0,) * degree + (coefficient,))

    def __add__(self, other):
        n = max(len(self.coefficients), len(other.coefficients))
        padded = [
            (self.coefficients + (0,) * n)[i] + (other.coefficients + (0,) * n)[i]
            for i in range(n)
        ]
        return Polynomial(padded)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(c * other for c in self.coefficients)
        product = [0] * max(len(self.coefficients) + len(other.coefficients) - 1, 0)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return Polynomial(product)

    def __call__(self, value):
        return sum(c * value ** i for i, c in enumerate(self.coefficients))

    def coefficient(self, degree):
        if degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    def __str__(self):
        terms = []
        for degree, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if degree == 0:
                terms.append(str(c))
                continue
            power = "t" if degree == 1 else f"t^{degree}"
            terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms) if terms else "0"
