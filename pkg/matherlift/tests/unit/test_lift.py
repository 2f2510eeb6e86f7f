from unittest import TestCase, mock

from matherlift.app.catalog import (
    cusp_branches,
    cusp_table,
    get_example,
    node_branches,
    quadric_cone_table,
)
from matherlift.app.chernring import IntersectionTable
from matherlift.app.conf import settings
from matherlift.app.exceptions import (
    DimensionMismatchError,
    GenericityFailure,
    IndeterminateOrderError,
    NonUniqueLiftError,
    PreconditionError,
    ZeroProjectionError,
)
from matherlift.app.lift import (
    LiftStep,
    LocalParam,
    ResolutionComponent,
    canonical_lift,
    certified_jacobian_multiplicity,
    curve_euler_obstruction,
    eu_from_jacobian_multiplicity,
    jacobian_multiplicity,
    lift_codim1,
    small_resolution_c1,
)
from matherlift.app.polar import certify_good_flag


def param(*coordinates, truncation=8):
    return LocalParam.from_coefficients(coordinates, truncation)


class TestLiftCodim1(TestCase):
    """Lifting a cycle from its intersection numbers."""

    def setUp(self):
        self.table = quadric_cone_table()

    def test_lift(self):
        """A surface meeting only d2, twice, is 2[p1]."""
        lifted = lift_codim1(LiftStep("X", self.table, (0, 2), 4))
        self.assertEqual(lifted, self.table.class_from({4: {"p1": 2}}))

    def test_zero_pairings(self):
        """A cycle meeting nothing lifts to zero."""
        self.assertTrue(lift_codim1(LiftStep("X", self.table, (0, 0), 4)).is_zero())

    def test_pairing_count(self):
        """One pairing is needed per complementary generator."""
        with self.assertRaises(NonUniqueLiftError):
            lift_codim1(LiftStep("X", self.table, (1,), 4))

    def test_singular_pairing(self):
        """A degenerate pairing does not determine the lift."""
        table = IntersectionTable(1, {2: ("X",), 0: ("pt",)})
        with self.assertRaises(NonUniqueLiftError):
            lift_codim1(LiftStep("X", table, (1,), 0))

    def test_odd_degree(self):
        """Lifts only land in even degrees carrying generators."""
        with self.assertRaises(DimensionMismatchError):
            lift_codim1(LiftStep("X", self.table, (1,), 3))


class TestCanonicalLift(TestCase):
    """Lifting whole polar chains."""

    @classmethod
    def setUpClass(cls):
        cls.example = get_example("cusp")
        cls.table = cls.example.table()
        cls.chain = certify_good_flag(cls.example.hypersurface(), 5).chain

    def test_cusp(self):
        """The polar points of the cusp lift to 3[pt]."""
        classes = canonical_lift(
            self.chain, self.example.lift_steps(self.chain, self.table), self.table
        )
        self.assertEqual(classes[0], self.table.fundamental_class())
        self.assertEqual(classes[1], self.table.class_from({0: {"pt": 3}}))

    def test_missing_steps(self):
        """A nonempty polar variety needs lift data."""
        with self.assertRaises(PreconditionError):
            canonical_lift(self.chain, {}, self.table)

    def test_stage_misses_cycle(self):
        """Every cycle of a stage must be lifted."""
        steps = {1: [{"other": LiftStep("X", self.table, (3,), 0)}]}
        with self.assertRaises(PreconditionError):
            canonical_lift(self.chain, steps, self.table)


class TestJacobianMultiplicity(TestCase):
    """Orders of projected branch derivatives."""

    def test_cusp_branch(self):
        """(t^2, t^3) has multiplicity 1."""
        self.assertEqual(jacobian_multiplicity(param([0, 0, 1], [0, 0, 0, 1]), (1, 1)), 1)

    def test_smooth_branch(self):
        """(t, t^2) has multiplicity 0."""
        self.assertEqual(jacobian_multiplicity(param([0, 1], [0, 0, 1]), (2, 3)), 0)

    def test_zero_projection(self):
        """All-zero projections are refused."""
        with self.assertRaises(ZeroProjectionError):
            jacobian_multiplicity(param([0, 1], [0, 1]), (0, 0))

    def test_indeterminate(self):
        """A projection killing the branch leaves no order."""
        with self.assertRaises(IndeterminateOrderError):
            jacobian_multiplicity(param([0, 1], [0, 1]), (1, -1))

    def test_coefficient_count(self):
        """One coefficient per coordinate."""
        with self.assertRaises(DimensionMismatchError):
            jacobian_multiplicity(param([0, 1], [0, 1]), (1,))

    def test_zero_param(self):
        """A parametrization must move."""
        with self.assertRaises(PreconditionError):
            param([0], [0])

    def test_certified_cusp(self):
        """Seeded projections agree on the cusp branch."""
        (branch,) = cusp_branches(8)["pt"]
        self.assertEqual(certified_jacobian_multiplicity(branch, seed=3), 1)

    def test_certified_reseeds(self):
        """A disagreeing pair of projections is replaced by a fresh pair."""
        (branch,) = cusp_branches(8)["pt"]
        with mock.patch(
            "matherlift.app.lift.jacobian_multiplicity", side_effect=[2, 1, 1, 1]
        ) as order:
            self.assertEqual(certified_jacobian_multiplicity(branch, seed=3), 1)
        self.assertEqual(order.call_count, 4)

    def test_certified_gives_up(self):
        """Disagreement on every attempt is a genericity failure."""
        (branch,) = cusp_branches(8)["pt"]
        attempts = settings.MAX_GENERICITY_ATTEMPTS
        with mock.patch(
            "matherlift.app.lift.jacobian_multiplicity", side_effect=[2, 1] * attempts
        ):
            with self.assertRaises(GenericityFailure) as raised:
                certified_jacobian_multiplicity(branch, seed=3)
        orders = raised.exception.detail["errors"][0]["detail"]["orders"]
        self.assertEqual(orders, [[2, 1]] * attempts)


class TestEulerObstruction(TestCase):
    """Euler obstructions of curve points."""

    def test_from_multiplicity(self):
        """Eu = n_W + 1 for a branch."""
        self.assertEqual(eu_from_jacobian_multiplicity(1), 2)
        with self.assertRaises(PreconditionError):
            eu_from_jacobian_multiplicity(-1)

    def test_cusp(self):
        """One singular branch gives Eu = 2."""
        self.assertEqual(curve_euler_obstruction(cusp_branches(8)["pt"]), 2)

    def test_node(self):
        """Two smooth branches give Eu = 2."""
        self.assertEqual(curve_euler_obstruction(node_branches(8)["node"]), 2)


class TestSmallResolution(TestCase):
    """First Chern class of the normalization."""

    def setUp(self):
        self.table = cusp_table()
        self.point = self.table.class_from({0: {"pt": 1}})

    def test_cusp(self):
        """Normalizing the cusp removes one point class."""
        c1_hat = self.table.class_from({0: {"pt": 3}})
        c1 = small_resolution_c1(c1_hat, [ResolutionComponent("pt", 1, self.point)])
        self.assertEqual(c1, 2 * self.point)

    def test_no_components(self):
        """Without components nothing changes."""
        self.assertEqual(small_resolution_c1(self.point, []), self.point)

    def test_negative_multiplicity(self):
        """Multiplicities are nonnegative."""
        with self.assertRaises(PreconditionError):
            small_resolution_c1(self.point, [ResolutionComponent("pt", -1, self.point)])
