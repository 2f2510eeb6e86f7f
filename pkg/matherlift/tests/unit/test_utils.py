import json
from fractions import Fraction
from unittest import TestCase

from matherlift.app.exceptions import InputInvalid
from matherlift.app.exactmath import MultiPoly
from matherlift.app.utils import SeededSource, dump_report, load_json_file, to_jsonable


class TestSeededSource(TestCase):
    """Reproducible pseudo-random streams."""

    def test_deterministic(self):
        """Equal seeds give equal streams."""
        first, second = SeededSource(42), SeededSource(42)
        self.assertEqual(
            [first.next_u64() for _i in range(20)], [second.next_u64() for _i in range(20)]
        )

    def test_known_value(self):
        """The first output of seed 0 is the splitmix64 reference value."""
        self.assertEqual(SeededSource(0).next_u64(), 0xE220A8397B1DCDAF)

    def test_ranges(self):
        """Draws stay within their bounds."""
        source = SeededSource(7)
        for _i in range(200):
            self.assertTrue(-3 <= source.rational(3) <= 3)
            self.assertNotEqual(source.nonzero_rational(3), 0)
            self.assertIn(source.integer(2, 4), (2, 3, 4))

    def test_spawn(self):
        """Spawned streams differ by salt and are themselves reproducible."""
        source = SeededSource(5)
        self.assertNotEqual(source.spawn(1).next_u64(), source.spawn(2).next_u64())
        self.assertEqual(source.spawn(1).next_u64(), SeededSource(5).spawn(1).next_u64())


class TestReports(TestCase):
    """JSON rendering of reports."""

    def test_to_jsonable(self):
        """Exact values print as strings."""
        self.assertEqual(to_jsonable(Fraction(3, 2)), "3/2")
        self.assertEqual(to_jsonable(MultiPoly.variable(("x",), "x")), "x")
        self.assertEqual(to_jsonable((1, 2)), [1, 2])
        with self.assertRaises(TypeError):
            to_jsonable(object())

    def test_dump_report(self):
        """Reports with fractions serialize."""
        self.assertEqual(json.loads(dump_report({"a": Fraction(1, 3)})), {"a": "1/3"})

    def test_missing_file(self):
        """A missing input file is an input error."""
        with self.assertRaises(InputInvalid):
            load_json_file("/nonexistent/matherlift.json")
