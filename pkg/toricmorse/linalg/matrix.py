"""
Exact matrices over Z and Q.

An IntMatrix is a two-dimensional numpy array of ``dtype=object`` whose entries
are Python ints, so entries never overflow. Rational matrices are the same
with ``fractions.Fraction`` entries. Elimination over Q is done by sympy on
converted copies, and results come back as Fractions. Nothing in this package
uses floating point.
"""

from fractions import Fraction

import numpy as np
import sympy as sp

from ..utils.misc import oneline


def int_matrix(rows, n_cols=None):
    """
    Builds an IntMatrix from a sequence of integer rows. ``n_cols`` is needed
    only when ``rows`` is empty.
    """
    rows = [list(row) for row in rows]
    if not rows:
        return np.zeros((0, n_cols or 0), dtype=object)
    width = len(rows[0])
    if n_cols is not None and n_cols != width:
        raise ValueError(f"Expected rows of length {n_cols}; got {width}")
    matrix = np.zeros((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ValueError(
                oneline(
                    f"""
                All rows of a matrix must have the same length;
                row {i} has length {len(row)}, expected {width}"""
                )
            )
        for j, entry in enumerate(row):
            if Fraction(entry).denominator != 1:
                raise ValueError(f"Entry {entry!r} of row {i} is not an integer")
            matrix[i, j] = int(entry)
    return matrix


def fraction_matrix(rows, n_cols=None):
    "Builds a rational matrix from a sequence of rows."
    rows = [list(row) for row in rows]
    if not rows:
        return np.zeros((0, n_cols or 0), dtype=object)
    matrix = np.zeros((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            matrix[i, j] = Fraction(entry)
    return matrix


def identity(n):
    matrix = np.zeros((n, n), dtype=object)
    for i in range(n):
        matrix[i, i] = 1
    return matrix


def to_rows(matrix):
    "Converts a matrix back into a tuple of tuples."
    return tuple(tuple(row) for row in matrix.tolist())


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), 0)


def mat_vec(matrix_rows, vector):
    return tuple(dot(row, vector) for row in matrix_rows)


def _rational(value):
    value = Fraction(value)
    return sp.Rational(value.numerator, value.denominator)


def _fraction(value):
    "Converts a sympy Rational back into a Fraction."
    return Fraction(int(value.p), int(value.q))


def to_sympy(matrix, n_cols=None):
    "A sympy Matrix with the exact entries of ``matrix``."
    if n_cols is None and hasattr(matrix, "shape"):
        n_cols = matrix.shape[1]
    rows = [[_rational(x) for x in row] for row in matrix]
    if not rows or not rows[0]:
        return sp.zeros(len(rows), n_cols or 0)
    return sp.Matrix(rows)


def from_sympy(matrix):
    "A rational numpy matrix with the entries of a sympy Matrix."
    return fraction_matrix(
        [[_fraction(x) for x in matrix.row(i)] for i in range(matrix.rows)],
        matrix.cols,
    )


def rref(matrix, n_cols=None):
    """
    Returns the reduced row echelon form of a rational matrix, without its zero
    rows, together with the tuple of pivot columns.
    """
    A = to_sympy(matrix, n_cols)
    if A.rows == 0:
        return fraction_matrix([], A.cols), ()
    R, pivots = A.rref()
    return from_sympy(R[: len(pivots), :]), tuple(pivots)


def rank(matrix, n_cols=None):
    "Rank over the rationals."
    A = to_sympy(matrix, n_cols)
    if A.rows == 0 or A.cols == 0:
        return 0
    return A.rank()


def nullspace(matrix, n_cols):
    """
    Returns a basis of {x : matrix @ x = 0} as a tuple of rational vectors, one
    per non-pivot column.
    """
    A = to_sympy(matrix, n_cols)
    if A.cols == 0:
        return ()
    if A.rows == 0:
        return to_rows(fraction_matrix(identity(n_cols).tolist(), n_cols))
    return tuple(tuple(_fraction(x) for x in vector) for vector in A.nullspace())


def solve(matrix, rhs, n_cols):
    """
    Returns one rational solution x of matrix @ x = rhs (free variables set to
    zero), or None if the system is inconsistent.
    """
    rhs = list(rhs)
    if not rhs:
        return tuple([Fraction(0)] * n_cols)
    if n_cols == 0:
        return () if not any(rhs) else None
    A = to_sympy(matrix, n_cols)
    b = to_sympy([[x] for x in rhs], 1)
    try:
        solution, params = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    solution = solution.subs({p: 0 for p in params})
    return tuple(_fraction(x) for x in solution)


def inverse(matrix):
    "Exact inverse of a square rational matrix."
    n = len(matrix)
    if n == 0:
        return fraction_matrix([], 0)
    A = to_sympy(matrix, n)
    if A.det() == 0:
        raise ValueError("Matrix is singular")
    return from_sympy(A.inv())


def int_inverse(matrix):
    "Inverse of a unimodular IntMatrix, as an IntMatrix."
    inv = inverse(matrix)
    if any(Fraction(x).denominator != 1 for x in inv.flat):
        raise ValueError("Matrix is not unimodular")
    return int_matrix([[int(x) for x in row] for row in inv.tolist()], len(matrix))


def determinant(matrix):
    "Exact determinant of a square matrix."
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    return _fraction(to_sympy(matrix, n).det())


def is_unimodular(matrix):
    return abs(determinant(matrix)) == 1
