"""
Smith and Hermite normal forms of integer matrices.

Both algorithms pivot deterministically, so their outputs (including the
transformation matrices) are stable across runs.
"""

import attr

from ..datatypes import SNFResult
from .matrix import identity, int_matrix


def snf(M):
    """
    Computes the Smith normal form of an IntMatrix: unimodular U, V and a
    diagonal D with U @ M @ V == D, d_1 | d_2 | ... and d_i >= 0.

    Pivots are chosen as the nonzero entry of smallest absolute value, ties
    broken by row-major position.
    """
    A, U, V = _smith(M, track=True)
    return SNFResult(U=U, D=A, V=V)


def invariant_factors(M):
    """
    Returns the nonzero diagonal entries of the Smith normal form of M, without
    tracking the transformation matrices.
    """
    A, _, _ = _smith(M, track=False)
    n_diag = min(A.shape)
    return [int(A[i, i]) for i in range(n_diag) if A[i, i] != 0]


def _smith(M, track):
    A = int_matrix(M.tolist(), M.shape[1]) if M.shape[0] else M.copy()
    n_rows, n_cols = A.shape
    U = identity(n_rows) if track else None
    V = identity(n_cols) if track else None

    def swap_rows(i, j):
        if i != j:
            A[[i, j]] = A[[j, i]]
            if track:
                U[[i, j]] = U[[j, i]]

    def swap_cols(i, j):
        if i != j:
            A[:, [i, j]] = A[:, [j, i]]
            if track:
                V[:, [i, j]] = V[:, [j, i]]

    t = 0
    while t < min(n_rows, n_cols):
        position = _smallest_nonzero(
            A, [(i, j) for i in range(t, n_rows) for j in range(t, n_cols)]
        )
        if position is None:
            break
        swap_rows(t, position[0])
        swap_cols(t, position[1])

        while True:
            clean = True
            for i in range(t + 1, n_rows):
                if A[i, t] != 0:
                    q = A[i, t] // A[t, t]
                    A[i] -= q * A[t]
                    if track:
                        U[i] -= q * U[t]
                    if A[i, t] != 0:
                        clean = False
            for j in range(t + 1, n_cols):
                if A[t, j] != 0:
                    q = A[t, j] // A[t, t]
                    A[:, j] -= q * A[:, t]
                    if track:
                        V[:, j] -= q * V[:, t]
                    if A[t, j] != 0:
                        clean = False

            if not clean:
                line = [(t, j) for j in range(t, n_cols)] + [
                    (i, t) for i in range(t + 1, n_rows)
                ]
                position = _smallest_nonzero(A, line)
                swap_rows(t, position[0])
                swap_cols(t, position[1])
                continue

            offender = next(
                (
                    i
                    for i in range(t + 1, n_rows)
                    for j in range(t + 1, n_cols)
                    if A[i, j] % A[t, t] != 0
                ),
                None,
            )
            if offender is None:
                break
            A[t] += A[offender]
            if track:
                U[t] += U[offender]

        if A[t, t] < 0:
            A[t] = -A[t]
            if track:
                U[t] = -U[t]
        t += 1

    return A, U, V


def _smallest_nonzero(A, positions):
    best = None
    for i, j in positions:
        if A[i, j] != 0 and (best is None or abs(A[i, j]) < abs(A[best])):
            best = (i, j)
    return best


@attr.s(frozen=True, eq=False)
class HNFResult:
    """
    The row-style Hermite normal form of an integer matrix M.

    Attributes
    ----------
    H: IntMatrix
        The nonzero rows of the echelon form: pivots strictly move right, are
        positive, and the entries above each pivot lie in [0, pivot).
    U: IntMatrix
        A unimodular matrix whose first rank(M) rows satisfy U[:r] @ M == H.
    pivots: tuple of int
        The pivot column of each row of H.
    """

    H = attr.ib()
    U = attr.ib()
    pivots = attr.ib()

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vector):
        """
        Reduces an integer vector modulo the row lattice of H. Returns the
        canonical representative and the integer coefficients c with
        representative == vector - c @ H.
        """
        vector = list(vector)
        coefficients = []
        for row, p in zip(self.H.tolist(), self.pivots):
            c = vector[p] // row[p]
            coefficients.append(c)
            if c:
                vector = [v - c * h for v, h in zip(vector, row)]
        return tuple(vector), tuple(coefficients)

    def contains(self, vector):
        reduced, _ = self.reduce(vector)
        return not any(reduced)


def hnf(M):
    "Computes the row-style Hermite normal form of an IntMatrix."
    A = M.copy()
    n_rows, n_cols = A.shape
    U = identity(n_rows)
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        while True:
            candidates = [i for i in range(r, n_rows) if A[i, c] != 0]
            if not candidates:
                break
            p = min(candidates, key=lambda i: (abs(A[i, c]), i))
            if p != r:
                A[[r, p]] = A[[p, r]]
                U[[r, p]] = U[[p, r]]
            done = True
            for i in range(r + 1, n_rows):
                if A[i, c] != 0:
                    q = A[i, c] // A[r, c]
                    A[i] -= q * A[r]
                    U[i] -= q * U[r]
                    if A[i, c] != 0:
                        done = False
            if done:
                break
        if A[r, c] == 0:
            continue
        if A[r, c] < 0:
            A[r] = -A[r]
            U[r] = -U[r]
        for i in range(r):
            q = A[i, c] // A[r, c]
            if q:
                A[i] -= q * A[r]
                U[i] -= q * U[r]
        pivots.append(c)
        r += 1
    return HNFResult(H=A[:r].copy(), U=U, pivots=tuple(pivots))
