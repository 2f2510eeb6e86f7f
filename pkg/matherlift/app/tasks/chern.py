import logging

from gettext import gettext as _

from matherlift.app.chernring import csm_isolated, mather_from_polar
from matherlift.app.conf import settings
from matherlift.app.exceptions import InputInvalid
from matherlift.app.lift import (
    ResolutionComponent,
    canonical_lift,
    certified_jacobian_multiplicity,
    curve_euler_obstruction,
    eu_from_jacobian_multiplicity,
    small_resolution_c1,
)
from matherlift.app.polar import certify_flag, certify_good_flag

log = logging.getLogger(__name__)


def example_chain(example, seed=None):
    """Certify the example's own flag when it has one, a seeded flag otherwise."""
    H = example.hypersurface()
    if example.flag_rows:
        return certify_flag(H, example.flag()).chain
    return certify_good_flag(H, seed).chain


def example_lift(example, chain, table=None):
    """Lift the polar classes of ``chain`` into the example's homology table."""
    table = table or example.table()
    return canonical_lift(chain, example.lift_steps(chain, table), table)


def euler_obstructions(example, seed=None, truncation=None):
    """
    Return ``(point, Eu)`` for every singular point of the example.

    Fixed obstructions come with the example; curve points get theirs from their local branches.
    """
    points = list(example.singular_points)
    if example.branches is not None:
        truncation = settings.SERIES_TRUNCATION if truncation is None else truncation
        for point, branches in example.branches(truncation).items():
            points.append((point, curve_euler_obstruction(branches, seed)))
    return points


def chern_classes(example, seed=None, truncation=None):
    """
    Compute the Chern-Mather and Chern-Schwartz-MacPherson classes of a built-in example.

    Returns:
        dict: The polar chain, the lifted polar classes, both Chern classes and the Euler
        obstructions that separate them.

    """
    table = example.table()
    chain = example_chain(example, seed)
    lifted = example_lift(example, chain, table)
    n = chain.hypersurface.n
    mather = mather_from_polar(lifted, n, table)
    points = euler_obstructions(example, seed, truncation)
    csm = csm_isolated(mather, points, example.point_summands)
    log.info(_("Chern classes of {}: {}").format(example.name, mather))
    return {
        "hypersurface": example.name,
        "polar": chain.to_json(),
        "lifted": lifted,
        "mather": mather,
        "csm": csm,
        "euler_obstructions": {point: eu for point, eu in points},
        "euler_characteristic": sum(csm.coefficients[0]),
    }


def curve_resolution(example, seed=None, truncation=None):
    """
    Compare the lifted first Chern class of a plane curve with that of its normalization.

    Every local branch is one point of the normalization; the ``k``-th branch overall is matched
    with the ``k``-th point generator of the example's table.

    Raises:
        InputInvalid: If the example has no local branches.

    """
    if example.branches is None:
        raise InputInvalid(_("Example has no local branches."), example=example.name)
    truncation = settings.SERIES_TRUNCATION if truncation is None else truncation
    table = example.table()
    chain = example_chain(example, seed)
    mather = mather_from_polar(example_lift(example, chain, table), chain.hypersurface.n, table)
    c1_hat = table.class_from({0: mather.component(0)})
    points = table.generators[0]
    branches = []
    components = []
    for point, params in example.branches(truncation).items():
        for param in params:
            name = points[len(components)]
            n_W = certified_jacobian_multiplicity(param, seed)
            components.append(
                ResolutionComponent(name, n_W, table.class_from({0: {name: 1}}))
            )
            branches.append(
                {
                    "point": point,
                    "component": name,
                    "n_W": n_W,
                    "eu": eu_from_jacobian_multiplicity(n_W),
                }
            )
    return {
        "hypersurface": example.name,
        "branches": branches,
        "euler_obstructions": {
            point: eu for point, eu in euler_obstructions(example, seed, truncation)
        },
        "c1_hat": c1_hat,
        "c1_resolution": small_resolution_c1(c1_hat, components),
    }
