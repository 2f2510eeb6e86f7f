from unittest import TestCase

from matherlift.app.exceptions import PropertyViolation
from matherlift.app.grassmann import GrassmannPoint, standard_flag
from matherlift.app.tasks import run_schubert_suite
from matherlift.app.tasks.schubert import check_sample


class TestSchubertSuite(TestCase):
    """Seeded checks of the Schubert cell properties."""

    @classmethod
    def setUpClass(cls):
        cls.report = run_schubert_suite(seed=7, samples=40, spaces=[[2, 4], [2, 5]])

    def test_counts(self):
        """Every sample is checked for nesting and the empty top cell."""
        for space in ("G(2,4)", "G(2,5)"):
            counts = self.report["spaces"][space]["counts"]
            self.assertEqual(counts["samples"], 40)
            self.assertEqual(counts["nesting"], 40)
            self.assertEqual(counts["top_empty"], 40)

    def test_deeper_cells_reached(self):
        """Special samples reach cells beyond the first."""
        cells = self.report["spaces"]["G(2,4)"]["cells_reached"]
        self.assertGreater(sum(count for key, count in cells.items() if key != "1"), 0)

    def test_witnesses(self):
        """Each witness lies in the open cell at i and in the cell at i + 1."""
        for space in self.report["spaces"].values():
            self.assertEqual([w["i"] for w in space["witnesses"]], [0, 1])
            for witness in space["witnesses"]:
                i = witness["i"]
                self.assertIn([i, 0], witness["strata"])
                self.assertIn([i + 1, 0], witness["strata"])

    def test_deterministic(self):
        """The same seed gives the same report."""
        again = run_schubert_suite(seed=7, samples=40, spaces=[[2, 4], [2, 5]])
        self.assertEqual(again, self.report)


class TestCheckSample(TestCase):
    """Single samples."""

    def test_applied_properties(self):
        """A plane in the open cell of M^1 also satisfies the regular part property."""
        W = GrassmannPoint([[0, 0, 1, 0], [0, 1, 0, 0]])
        applied = check_sample("G(2,4)", W, standard_flag(4), 1)
        self.assertEqual(applied, {"nesting", "top_empty", "regular_part"})

    def test_violation_payload(self):
        """Violations carry the sample that failed."""
        error = PropertyViolation(space="G(2,4)", property="nesting")
        self.assertEqual(error.exit_code, 3)
        self.assertEqual(error.detail["errors"][0]["detail"]["space"], "G(2,4)")
