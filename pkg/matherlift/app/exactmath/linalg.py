"""Exact rational matrices: fraction-free rank and Gauss-Jordan solving."""
from fractions import Fraction
from gettext import gettext as _
from math import lcm

from matherlift.app.exceptions import DimensionMismatchError, NonUniqueLiftError


class RationalMatrix:
    """A dense matrix of ``Fraction`` entries stored row by row."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(row) != ncols for row in rows):
            raise DimensionMismatchError(_("Ragged matrix rows."), ncols=ncols)
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def zero(cls, nrows, ncols):
        return cls([[0] * ncols for _i in range(nrows)], ncols)

    @classmethod
    def identity(cls, size):
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)], size)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def row(self, index):
        return self.rows[index]

    def head(self, count):
        """The matrix made of the first ``count`` rows."""
        return RationalMatrix(self.rows[:count], self.ncols)

    def stack(self, other):
        if self.ncols != other.ncols:
            raise DimensionMismatchError(
                _("Cannot stack matrices of different widths."), left=self.ncols, right=other.ncols
            )
        return RationalMatrix(self.rows + other.rows, self.ncols)

    def transpose(self):
        return RationalMatrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)], self.nrows
        )

    def apply(self, vector):
        if len(vector) != self.ncols:
            raise DimensionMismatchError(
                _("Vector length does not match the matrix."), ncols=self.ncols, length=len(vector)
            )
        vector = [Fraction(b) for b in vector]
        return tuple(sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.ncols, self.rows))

    def __repr__(self):
        return "RationalMatrix({})".format([[str(x) for x in row] for row in self.rows])


def matrix_rank(matrix):
    """
    Return the rank using fraction-free (Bareiss) elimination.

    Rows are first scaled to integers so every intermediate entry stays an integer minor.
    """
    rows = []
    for row in matrix.rows:
        scale = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * scale) for x in row])
    rank = 0
    previous = 1
    for col in range(matrix.ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        top = rows[rank]
        for r in range(rank + 1, len(rows)):
            below = rows[r]
            rows[r] = [
                (top[col] * below[c] - below[col] * top[c]) // previous
                for c in range(matrix.ncols)
            ]
        previous = top[col]
        rank += 1
        if rank == len(rows):
            break
    return rank


def solve(matrix, rhs):
    """
    Solve ``matrix * x = rhs`` for a square invertible matrix.

    Raises:
        NonUniqueLiftError: If the matrix is not square or is singular.

    """
    size = matrix.nrows
    if matrix.ncols != size or len(rhs) != size:
        raise NonUniqueLiftError(
            _("Pairing matrix must be square."), shape=list(matrix.shape), rhs=len(rhs)
        )
    augmented = [list(row) + [Fraction(b)] for row, b in zip(matrix.rows, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if augmented[r][col]), None)
        if pivot is None:
            raise NonUniqueLiftError(shape=list(matrix.shape))
        augmented[col], augmented[pivot] = augmented[pivot], augmented[col]
        inverse = 1 / augmented[col][col]
        augmented[col] = [x * inverse for x in augmented[col]]
        for r in range(size):
            if r != col and augmented[r][col]:
                factor = augmented[r][col]
                augmented[r] = [a - factor * b for a, b in zip(augmented[r], augmented[col])]
    return tuple(row[-1] for row in augmented)
