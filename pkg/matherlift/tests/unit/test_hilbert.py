from unittest import TestCase

import sympy

from matherlift.app.catalog import intersection_number
from matherlift.app.exceptions import HilbertLimitError, HomogeneityError
from matherlift.app.exactmath import (
    HilbertData,
    Ideal,
    MultiPoly,
    groebner,
    hilbert_dim_degree,
    hilbert_numerator,
)
from matherlift.app.utils import SeededSource

XYZ = ("x", "y", "z")


def var(name):
    return MultiPoly.variable(XYZ, name)


class TestHilbertNumerator(TestCase):
    """Inclusion-exclusion over lead monomials."""

    def test_single_square(self):
        """(x^2) in two variables has numerator 1 - t^2."""
        self.assertEqual(hilbert_numerator([(2, 0)], 2), [1, 0, -1])

    def test_no_monomials(self):
        """The zero ideal has numerator 1."""
        self.assertEqual(hilbert_numerator([], 3), [1])


class TestHilbertDimDegree(TestCase):
    """Dimension and degree of projective schemes."""

    def setUp(self):
        self.x, self.y, self.z = (var(name) for name in XYZ)

    def test_conic(self):
        """A plane conic is a curve of degree 2."""
        data = hilbert_dim_degree(groebner(Ideal(XYZ, [self.x * self.z - self.y**2])))
        self.assertEqual(data, HilbertData(2, 2))
        self.assertEqual(data.projective_dimension, 1)

    def test_zero_ideal(self):
        """The zero ideal is the whole plane."""
        self.assertEqual(hilbert_dim_degree(groebner(Ideal(XYZ))), HilbertData(3, 1))

    def test_unit_ideal(self):
        """The unit ideal is empty."""
        data = hilbert_dim_degree(groebner(Ideal.unit(XYZ)))
        self.assertEqual(data, HilbertData(-1, 0))
        self.assertTrue(data.is_empty)

    def test_irrelevant_ideal(self):
        """(x, y, z) defines the empty projective scheme."""
        data = hilbert_dim_degree(groebner(Ideal(XYZ, [self.x, self.y, self.z])))
        self.assertEqual(data.dimension, 0)
        self.assertTrue(data.is_empty)

    def test_not_homogeneous(self):
        """An affine equation is refused."""
        with self.assertRaises(HomogeneityError):
            hilbert_dim_degree(groebner(Ideal(XYZ, [self.x - 1])))

    def test_generator_limit(self):
        """Twenty-one lead monomials exceed the inclusion-exclusion limit."""
        quintics = [
            MultiPoly(XYZ, {(a, b, 5 - a - b): 1}) for a in range(6) for b in range(6 - a)
        ]
        with self.assertRaises(HilbertLimitError):
            hilbert_dim_degree(groebner(Ideal(XYZ, quintics)))


CURVES = {
    "conic": lambda x, y, z: x * z - y**2,
    "nodal cubic": lambda x, y, z: y * y * z - x * x * (x + z),
    "cuspidal cubic": lambda x, y, z: y * y * z - x**3,
    "fermat cubic": lambda x, y, z: x**3 + y**3 + z**3,
    "quartic": lambda x, y, z: x**4 + y**4 - z**4 + x * y * z * z,
}


def distinct_points_on_line(f, line):
    """Count the points of ``f = 0`` on the line by a resultant and a square-free part."""
    x, y, z = sympy.symbols("x y z")
    binary = sympy.expand(sympy.resultant(f(x, y, z), line(x, y, z), z))
    affine = sympy.Poly(binary.subs(y, 1), x)
    at_infinity = 1 if affine.degree() < sympy.Poly(binary, x, y).total_degree() else 0
    return affine.sqf_part().degree() + at_infinity


class TestSliceAndCount(TestCase):
    """Degrees of plane curves against a count of points on seeded random lines."""

    LINES = 5

    def setUp(self):
        self.x, self.y, self.z = (var(name) for name in XYZ)
        source = SeededSource(424242)
        self.lines = []
        for k in range(self.LINES):
            stream = source.spawn(k)
            a, b = stream.rational(), stream.rational()
            c = stream.nonzero_rational()
            self.lines.append((a, b, c))

    def test_degree_is_point_count(self):
        """A general line meets a plane curve in as many points as its Hilbert degree."""
        for name, curve in CURVES.items():
            f = curve(self.x, self.y, self.z)
            for a, b, c in self.lines:
                line = a * self.x + b * self.y + c * self.z
                data = hilbert_dim_degree(groebner(Ideal(XYZ, [f, line])))
                self.assertEqual(data.projective_dimension, 0, name)

                def sympy_line(x, y, z, a=a, b=b, c=c):
                    return sum(
                        sympy.Rational(k.numerator, k.denominator) * v
                        for k, v in ((a, x), (b, y), (c, z))
                    )

                self.assertEqual(distinct_points_on_line(curve, sympy_line), data.degree, name)


class TestIntersectionNumber(TestCase):
    """Intersection numbers counted with multiplicity."""

    def setUp(self):
        self.x, self.y, self.z = (var(name) for name in XYZ)

    def test_tangent_counts_twice(self):
        """The tangent line x = 0 meets the conic in a double point."""
        conic = Ideal(XYZ, [self.x * self.z - self.y**2])
        self.assertEqual(intersection_number(conic, Ideal(XYZ, [self.x])), 2)

    def test_cubic_and_line(self):
        """A line through the cusp still meets the cuspidal cubic three times in all."""
        cusp = Ideal(XYZ, [self.y**2 * self.z - self.x**3])
        self.assertEqual(intersection_number(cusp, Ideal(XYZ, [self.y])), 3)
