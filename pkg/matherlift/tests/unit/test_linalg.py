from fractions import Fraction
from unittest import TestCase

from matherlift.app.exceptions import DimensionMismatchError, NonUniqueLiftError
from matherlift.app.exactmath import RationalMatrix, matrix_rank, solve


class TestRank(TestCase):
    """Fraction-free rank."""

    def test_dependent_rows(self):
        """Proportional rows have rank one."""
        self.assertEqual(matrix_rank(RationalMatrix([[1, 2], [2, 4]])), 1)

    def test_fractions(self):
        """Fractional entries are scaled before elimination."""
        matrix = RationalMatrix([[Fraction(1, 2), Fraction(1, 3), 0], [3, 2, 0], [0, 0, 1]])
        self.assertEqual(matrix_rank(matrix), 2)

    def test_wide_and_empty(self):
        """Rank never exceeds the row count; the empty matrix has rank zero."""
        self.assertEqual(matrix_rank(RationalMatrix([[0, 1, 2, 3]])), 1)
        self.assertEqual(matrix_rank(RationalMatrix.zero(2, 3)), 0)
        self.assertEqual(matrix_rank(RationalMatrix([], 4)), 0)

    def test_identity(self):
        """The identity has full rank."""
        self.assertEqual(matrix_rank(RationalMatrix.identity(5)), 5)


class TestSolve(TestCase):
    """Exact Gauss-Jordan solving."""

    def test_solution(self):
        """A 2x2 system has its exact rational solution."""
        matrix = RationalMatrix([[0, 2], [3, 1]])
        self.assertEqual(solve(matrix, [4, 5]), (Fraction(1), Fraction(2)))

    def test_singular(self):
        """A singular matrix does not determine a solution."""
        with self.assertRaises(NonUniqueLiftError):
            solve(RationalMatrix([[1, 1], [1, 1]]), [1, 1])

    def test_not_square(self):
        """Only square systems are solved."""
        with self.assertRaises(NonUniqueLiftError):
            solve(RationalMatrix([[1, 0, 0], [0, 1, 0]]), [1, 1])


class TestShape(TestCase):
    """Shape checks."""

    def test_ragged(self):
        """Rows must have equal length."""
        with self.assertRaises(DimensionMismatchError):
            RationalMatrix([[1, 2], [3]])

    def test_stack(self):
        """Stacking needs equal widths."""
        top = RationalMatrix([[1, 0]])
        self.assertEqual(top.stack(RationalMatrix([[0, 1]])), RationalMatrix.identity(2))
        with self.assertRaises(DimensionMismatchError):
            top.stack(RationalMatrix([[1, 2, 3]]))

    def test_apply_and_transpose(self):
        """Matrix-vector products and transposes."""
        matrix = RationalMatrix([[1, 2], [3, 4]])
        self.assertEqual(matrix.apply([1, 1]), (3, 7))
        self.assertEqual(matrix.transpose().row(0), (1, 3))
        with self.assertRaises(DimensionMismatchError):
            matrix.apply([1])
