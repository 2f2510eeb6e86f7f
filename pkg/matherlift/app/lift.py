"""
Lifting polar classes into the intersection homology of ``X``.

A cycle inside a codimension one subvariety is identified by its intersection numbers against the
middle-degree generators of that subvariety; repeating this along ``N^i ⊂ N^{i-1} ⊂ ... ⊂ X`` gives
the canonical lift of ``[N^i]``. Curve singularities are handled through Jacobian multiplicities.
"""
import logging
from fractions import Fraction
from gettext import gettext as _
from typing import NamedTuple, Tuple

from matherlift.app.chernring import GradedClass, IntersectionTable
from matherlift.app.conf import settings
from matherlift.app.exceptions import (
    DimensionMismatchError,
    GenericityFailure,
    NonUniqueLiftError,
    PreconditionError,
    ZeroProjectionError,
)
from matherlift.app.exactmath.linalg import solve
from matherlift.app.exactmath.series import PowerSeries1, series_order
from matherlift.app.utils import SeededSource

log = logging.getLogger(__name__)


class LiftStep(NamedTuple):
    """
    The data needed to lift one cycle into an ambient space.

    ``cycle_pairings`` are the intersection numbers of the cycle with the generators of
    ``table`` in the degree complementary to ``degree``, in table order.
    """

    ambient_name: str
    table: IntersectionTable
    cycle_pairings: Tuple[Fraction, ...]
    degree: int


class ResolutionComponent(NamedTuple):
    name: str
    n_W: int
    class_in_resolution: GradedClass


class LocalParam:
    """A local parametrization ``t -> (x_1(t), ..., x_r(t))`` of one branch."""

    __slots__ = ("coordinate_series",)

    def __init__(self, coordinate_series):
        coordinate_series = tuple(coordinate_series)
        if not coordinate_series or all(s.is_zero for s in coordinate_series):
            raise PreconditionError(_("A parametrization needs a nonzero coordinate."))
        self.coordinate_series = coordinate_series

    @classmethod
    def from_coefficients(cls, coordinates, truncation):
        """Build from per-coordinate coefficient lists ``[c_0, c_1, ...]``."""
        return cls(PowerSeries1(c, truncation) for c in coordinates)

    @property
    def truncation(self):
        return min(s.truncation for s in self.coordinate_series)


def lift_codim1(step):
    """
    Return the unique class over ``step.table`` in ``step.degree`` with the given pairings.

    Raises:
        NonUniqueLiftError: If the pairing matrix is not square and invertible.

    """
    table = step.table
    names = table.generators.get(step.degree)
    if names is None:
        raise DimensionMismatchError(_("No generators in the lift degree."), degree=step.degree)
    complement = table.generators[2 * table.ambient_dim - step.degree]
    if len(step.cycle_pairings) != len(complement):
        raise NonUniqueLiftError(
            _("One pairing per complementary generator is needed."),
            ambient=step.ambient_name,
            pairings=len(step.cycle_pairings),
            generators=len(complement),
        )
    matrix = table.pairing_matrix(step.degree)
    coefficients = solve(matrix, step.cycle_pairings)
    lifted = GradedClass(table.generators, {step.degree: coefficients})
    for name, expected in zip(complement, step.cycle_pairings):
        if table.pair(lifted, name) != Fraction(expected):
            raise NonUniqueLiftError(
                _("Lifted class does not reproduce its pairings."), ambient=step.ambient_name
            )
    log.debug("Lifted into %s: %s", step.ambient_name, lifted)
    return lifted


def canonical_lift(chain, steps, table_x):
    """
    Lift every polar class of ``chain`` into the homology of ``X``.

    Args:
        chain (PolarChain): The certified polar chain.
        steps (dict): For each nonempty ``i >= 1``, the list of lift stages from ``N^i`` up to
            ``X``; each stage maps the names of the cycles being lifted to their ``LiftStep``.
        table_x (IntersectionTable): The table of ``X``.

    Returns:
        list: ``[N^0], ..., [N^n]`` over ``table_x``; empty polar varieties give zero.

    """
    n = chain.hypersurface.n
    classes = [table_x.fundamental_class()]
    for i in range(1, n + 1):
        if chain.step(i) is None:
            classes.append(table_x.zero())
            continue
        stages = steps.get(i)
        if not stages:
            raise PreconditionError(_("No lift data for a nonempty polar variety."), step=i)
        current = {f"N{i}": Fraction(1)}
        lifted = None
        for stage in stages:
            lifted = None
            for name, weight in current.items():
                if not weight:
                    continue
                if name not in stage:
                    raise PreconditionError(_("Lift stage misses a cycle."), step=i, cycle=name)
                image = weight * lift_codim1(stage[name])
                lifted = image if lifted is None else lifted + image
            if lifted is None:
                break
            current = {
                name: c
                for degree in lifted.nonzero_degrees()
                for name, c in lifted.component(degree).items()
            }
        if lifted is None:
            classes.append(table_x.zero())
        elif lifted.generators != table_x.generators:
            raise PreconditionError(_("The last lift stage must land in X."), step=i)
        else:
            classes.append(lifted)
    return classes


def jacobian_multiplicity(param, proj_coeffs):
    """
    Return the order at ``t = 0`` of the derivative of a linear projection of ``param``.

    Raises:
        ZeroProjectionError: If all projection coefficients vanish.
        IndeterminateOrderError: If the derivative is zero up to the truncation.

    """
    if len(proj_coeffs) != len(param.coordinate_series):
        raise DimensionMismatchError(
            _("One projection coefficient per coordinate is needed."),
            coefficients=len(proj_coeffs),
            coordinates=len(param.coordinate_series),
        )
    if not any(proj_coeffs):
        raise ZeroProjectionError()
    composed = None
    for coefficient, series in zip(proj_coeffs, param.coordinate_series):
        term = series * Fraction(coefficient)
        composed = term if composed is None else composed + term
    return series_order(composed.derivative())


def certified_jacobian_multiplicity(param, seed=None):
    """
    Return the Jacobian multiplicity agreed on by two seeded general projections.

    A disagreement means one projection was special; fresh pairs are drawn up to the attempt
    limit.

    Raises:
        GenericityFailure: If no pair of projections agrees.

    """
    source = SeededSource(seed)
    history = []
    for attempt in range(settings.MAX_GENERICITY_ATTEMPTS):
        orders = []
        for salt in (2 * attempt, 2 * attempt + 1):
            stream = source.spawn(salt)
            coefficients = [stream.nonzero_rational() for _s in param.coordinate_series]
            orders.append(jacobian_multiplicity(param, coefficients))
        if orders[0] == orders[1]:
            return orders[0]
        log.warning(_("Projection seeds disagree ({} != {}); retrying").format(*orders))
        history.append(orders)
    raise GenericityFailure(_("Projection seeds disagree."), orders=history)


def eu_from_jacobian_multiplicity(n_W):
    if n_W < 0:
        raise PreconditionError(_("Jacobian multiplicity must be nonnegative."), n_W=n_W)
    return Fraction(n_W + 1)


def curve_euler_obstruction(branches, seed=None):
    """Return the Euler obstruction of a curve at a point as the sum over its local branches."""
    return sum(
        (eu_from_jacobian_multiplicity(certified_jacobian_multiplicity(b, seed)) for b in branches),
        Fraction(0),
    )


def small_resolution_c1(c1_lift, comps):
    """Return ``ĉ^1 - sum n_W [W]``, the first Chern class of the small resolution."""
    result = c1_lift
    for comp in comps:
        if comp.n_W < 0:
            raise PreconditionError(_("Jacobian multiplicity must be nonnegative."), n_W=comp.n_W)
        result = result - comp.n_W * comp.class_in_resolution
    return result
