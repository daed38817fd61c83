"""
Lattice utilities: primitive vectors, saturations, integer kernels, unimodular
completions and bases adapted to chains of sublattices.
"""

from fractions import Fraction
import math

from ..datatypes import AdaptedBasis
from ..exception import LatticeChainError, ZeroCharacterError
from ..utils.misc import oneline
from .matrix import identity, int_inverse, int_matrix, rank, solve, to_rows
from .normal_forms import hnf, snf


def normalize_sign(vector):
    """
    Returns the vector with its first nonzero entry made positive, and whether
    it had to be negated.
    """
    vector = tuple(vector)
    first = next((x for x in vector if x != 0), 0)
    if first < 0:
        return tuple(-x for x in vector), True
    return vector, False


def primitive_part(alpha):
    """
    Divides an integer vector by the gcd of its entries and makes its first
    nonzero entry positive.
    """
    alpha = tuple(int(x) for x in alpha)
    if not any(alpha):
        raise ZeroCharacterError.for_vector(alpha)
    g = 0
    for x in alpha:
        g = math.gcd(g, x)
    primitive, _ = normalize_sign(x // g for x in alpha)
    return primitive


def content(alpha):
    "The gcd of the entries of an integer vector."
    g = 0
    for x in alpha:
        g = math.gcd(g, int(x))
    return g


def integral_direction(alpha):
    """
    Scales a nonzero rational vector by a positive factor into a primitive
    integer vector. Returns the vector and the factor.
    """
    alpha = tuple(Fraction(x) for x in alpha)
    if not any(alpha):
        raise ZeroCharacterError.for_vector(alpha)
    denominator = math.lcm(*(x.denominator for x in alpha))
    scaled = [int(x * denominator) for x in alpha]
    g = content(scaled)
    factor = Fraction(denominator, g)
    return tuple(x // g for x in scaled), factor


def lattice_rank(M):
    "The rank over the rationals of an integer matrix (0 for the empty matrix)."
    if M.shape[0] == 0 or M.shape[1] == 0:
        return 0
    return rank(M.tolist(), M.shape[1])


def integer_kernel(generators, dim):
    """
    Returns a basis (as rows, in Hermite normal form) of the saturated lattice
    {x in Z^dim : g . x = 0 for every generator g}.
    """
    G = int_matrix(generators, dim)
    if G.shape[0] == 0:
        return to_rows(identity(dim))
    result = snf(G)
    r = result.rank
    V = result.V
    columns = [[V[i, j] for i in range(dim)] for j in range(r, dim)]
    if not columns:
        return ()
    return to_rows(hnf(int_matrix(columns, dim)).H)


def saturation(generators, dim):
    """
    Returns the Hermite basis (as rows) of the saturation of the lattice
    spanned by ``generators``, i.e. span_Q(generators) intersected with Z^dim.
    """
    kernel = integer_kernel(generators, dim)
    return integer_kernel(kernel, dim)


def complete_to_basis(basis, dim):
    """
    Extends the rows of ``basis``, which must span a saturated sublattice of
    Z^dim, to a basis of Z^dim. Returns the full unimodular list of rows, with
    ``basis`` first.
    """
    basis = [tuple(int(x) for x in row) for row in basis]
    if not basis:
        return to_rows(identity(dim))
    result = snf(int_matrix(basis, dim))
    factors = result.invariant_factors()
    if len(factors) != len(basis) or any(f != 1 for f in factors):
        raise LatticeChainError(
            oneline(
                f"""
            Rows {basis!r} do not form a basis of a saturated sublattice
            (invariant factors {factors})"""
            )
        )
    V_inverse = int_inverse(result.V)
    extra = to_rows(V_inverse[len(basis) :])
    return tuple(basis) + extra


def lattice_contains(generators, vector, dim):
    "Whether an integer vector lies in the lattice spanned by ``generators``."
    G = int_matrix(generators, dim)
    if G.shape[0] == 0:
        return not any(vector)
    return hnf(G).contains(vector)


def coordinates(vector, basis_rows, dim):
    """
    Returns the rational coefficients c with vector == sum c_i * basis_rows[i],
    or None if the vector is not in their span.
    """
    transposed = [[row[j] for row in basis_rows] for j in range(dim)]
    return solve(transposed, vector, len(basis_rows))


def adapted_basis(chain, dim=None):
    """
    Computes a basis u_1, ..., u_d of Z^d adapted to a chain of sublattices
    L_1 <= L_2 <= ... <= Z^d: for every L_j the first rank(L_j) vectors of the
    basis span the saturation of L_j.

    Each lattice is given as a sequence of integer generator rows. Lattices
    that are not saturated are saturated silently. If the last lattice has
    rank below ``dim``, Z^dim is appended to the chain.
    """
    chain = [[tuple(int(x) for x in row) for row in lattice] for lattice in chain]
    if dim is None:
        dim = next((len(row) for lattice in chain for row in lattice), None)
        if dim is None:
            raise LatticeChainError("Cannot infer the dimension of an empty chain")

    for j in range(len(chain) - 1):
        smaller, larger = chain[j], chain[j + 1]
        for row in smaller:
            if not lattice_contains(larger, row, dim):
                raise LatticeChainError(
                    oneline(
                        f"""
                    Chain is not nested: generator {row!r} of lattice {j}
                    is not in lattice {j + 1}"""
                    )
                )

    saturated = [saturation(lattice, dim) for lattice in chain]
    prefix_ranks = [len(lattice) for lattice in saturated]
    if not saturated or prefix_ranks[-1] < dim:
        saturated.append(to_rows(identity(dim)))

    u = []
    for lattice in saturated:
        if len(lattice) == len(u):
            continue
        if u:
            coefficient_rows = []
            for vector in u:
                coefficients = coordinates(vector, lattice, dim)
                assert coefficients is not None
                coefficient_rows.append([int(c) for c in coefficients])
        else:
            coefficient_rows = []
        completed = complete_to_basis(coefficient_rows, len(lattice))
        for row in completed[len(u) :]:
            u.append(
                tuple(
                    sum(c * lattice[k][j] for k, c in enumerate(row))
                    for j in range(dim)
                )
            )

    return AdaptedBasis(u=u, prefix_ranks=prefix_ranks)
