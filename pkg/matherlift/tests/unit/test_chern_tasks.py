from unittest import TestCase

from matherlift.app.catalog import (
    BUILTIN_EXAMPLES,
    cusp_branches,
    get_example,
    intersection_number,
)
from matherlift.app.exceptions import GenericityFailure, InputInvalid
from matherlift.app.tasks import chern_classes, curve_resolution
from matherlift.app.tasks.chern import euler_obstructions

SEED = 5


class TestChernClasses(TestCase):
    """Chern-Mather and CSM classes of the built-in examples."""

    def run_example(self, name):
        return chern_classes(get_example(name), SEED)

    def test_smooth_conic(self):
        """A smooth conic is a P^1: c = X + 2pt and both classes agree."""
        report = self.run_example("smooth_conic")
        self.assertEqual(str(report["mather"]), "[X] + 2[pt]")
        self.assertEqual(report["csm"], report["mather"])
        self.assertEqual(report["euler_characteristic"], 2)

    def test_smooth_quadric(self):
        """P^1 x P^1 has c = B + 2(l1 + l2) + 4pt."""
        report = self.run_example("smooth_quadric")
        self.assertEqual(str(report["mather"]), "[B] + 2[l1] + 2[l2] + 4[pt]")
        self.assertEqual(report["euler_characteristic"], 4)

    def test_projective_plane(self):
        """A plane in P^3 has c = X + 3L + 3pt."""
        report = self.run_example("projective_plane")
        self.assertEqual(str(report["mather"]), "[X] + 3[L] + 3[pt]")
        self.assertEqual(report["euler_characteristic"], 3)

    def test_node(self):
        """Two lines meeting in a point have Euler characteristic 3."""
        report = self.run_example("node")
        self.assertEqual(str(report["mather"]), "[X1] + [X2] + 2[pt1] + 2[pt2]")
        self.assertEqual(report["euler_obstructions"], {"node": 2})
        self.assertEqual(report["csm"].coefficient(0, "node"), -1)
        self.assertEqual(report["euler_characteristic"], 3)

    def test_cusp(self):
        """The cusp has c_M = X + 3pt and its CSM class drops to 2pt at the cusp."""
        report = self.run_example("cusp")
        self.assertEqual(str(report["mather"]), "[X] + 3[pt]")
        self.assertEqual(report["csm"].coefficient(0, "pt"), 2)
        self.assertEqual(report["euler_characteristic"], 2)

    def test_quadric_cone(self):
        """The cone over P^1 x P^1 has Euler characteristic 5."""
        report = self.run_example("quadric_cone")
        self.assertEqual(
            str(report["mather"]), "[X] + 3[p1] + 3[p2] + 4[d1] + 4[d2] + 6[pt]"
        )
        self.assertEqual(report["csm"].coefficient(0, "vertex"), -1)
        self.assertEqual(report["euler_characteristic"], 5)

    def test_mather_is_integral(self):
        """Every built-in example has an integral Chern-Mather class."""
        for name in BUILTIN_EXAMPLES:
            self.assertTrue(self.run_example(name)["mather"].is_integral(), name)


class TestCurveResolution(TestCase):
    """Normalizations of singular plane curves."""

    def test_cusp(self):
        """The normalization of the cusp is a P^1."""
        report = curve_resolution(get_example("cusp"), SEED)
        self.assertEqual(
            report["branches"], [{"point": "pt", "component": "pt", "n_W": 1, "eu": 2}]
        )
        self.assertEqual(str(report["c1_hat"]), "3[pt]")
        self.assertEqual(str(report["c1_resolution"]), "2[pt]")

    def test_node(self):
        """The normalization of the node is two copies of P^1."""
        report = curve_resolution(get_example("node"), SEED)
        self.assertEqual([b["component"] for b in report["branches"]], ["pt1", "pt2"])
        self.assertEqual(str(report["c1_resolution"]), "2[pt1] + 2[pt2]")

    def test_no_branches(self):
        """Only curves with local branches can be normalized."""
        with self.assertRaises(InputInvalid):
            curve_resolution(get_example("quadric_cone"), SEED)


class TestCatalog(TestCase):
    """Built-in examples."""

    def test_unknown_example(self):
        """Unknown names are input errors listing the known ones."""
        with self.assertRaises(InputInvalid) as context:
            get_example("klein_quartic")
        detail = context.exception.detail["errors"][0]["detail"]
        self.assertIn("cusp", detail["known"])

    def test_cusp_parametrization(self):
        """The cusp branch lies on the curve x^3 + y^2 z."""
        (branch,) = cusp_branches(10)["pt"]
        x, y = branch.coordinate_series
        self.assertTrue((x * x * x + y * y).is_zero)

    def test_fixed_obstructions(self):
        """The cone vertex has a fixed Euler obstruction of 2."""
        self.assertEqual(euler_obstructions(get_example("quadric_cone")), [("vertex", 2)])

    def test_improper_intersection(self):
        """A curve does not meet itself properly."""
        ideal = get_example("smooth_conic").hypersurface().ideal
        with self.assertRaises(GenericityFailure):
            intersection_number(ideal, ideal)
