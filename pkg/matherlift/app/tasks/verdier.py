import logging

from fractions import Fraction
from gettext import gettext as _

from matherlift.constants import EXAMPLE
from matherlift.app import catalog
from matherlift.app.chernring import csm_isolated, mather_from_polar
from matherlift.app.exceptions import ScenarioFailure
from matherlift.app.ihcone import (
    ConeInput,
    a1_link_betti,
    cone_ih_betti,
    is_rational_homology_manifold_cone,
    plane_curve_betti,
    plane_curve_cone_input,
    thom_homology,
)
from matherlift.app.lift import LiftStep, canonical_lift, lift_codim1
from matherlift.app.polar import certify_flag, check_chain_nesting, check_saturation_stable

log = logging.getLogger(__name__)

# Betti numbers of P^1 x P^1, the base of the quadric cone.
QUADRIC_BASE_BETTI = (1, 0, 2, 0, 1)


def _expect(quantity, expected, actual):
    if expected != actual:
        log.error(_("Scenario quantity {} is {}, expected {}").format(quantity, actual, expected))
        raise ScenarioFailure(quantity, expected, actual)
    log.info("%s = %s", quantity, actual)


def resolution_class(name, chain_classes, table):
    """
    Compute ``c*`` of one small resolution of the quadric cone.

    The resolution sees ``N^2`` through its proper inverse image, whose class is lifted from its
    intersection numbers with ``p1, p2``; the other polar classes are unchanged.
    """
    proper = lift_codim1(LiftStep(name, table, catalog.RESOLUTION_N2_PAIRINGS[name], 2))
    classes = list(chain_classes)
    classes[2] = proper
    return proper, mather_from_polar(classes, 3, table)


def verdier_scenario(table=None):
    """
    Run the quadric cone computation end to end and check every quantity on the way.

    Args:
        table (IntersectionTable): The homology table of the cone; the built-in one by default.

    Returns:
        dict: The report, keyed by the usual names of the intermediate classes.

    Raises:
        ScenarioFailure: At the first quantity that disagrees with its expected value.

    """
    example = catalog.get_example(EXAMPLE.QUADRIC_CONE)
    table = table or catalog.quadric_cone_table()
    H = example.hypersurface()
    chain = certify_flag(H, example.flag()).chain
    check_chain_nesting(chain)
    check_saturation_stable(chain)
    _expect("degrees", (2, 2, 2), tuple(step.degree for step in chain.steps))
    _expect("terminated_at", 3, chain.terminated_at)

    steps = catalog.quadric_cone_lift_steps(chain, table)
    classes = canonical_lift(chain, steps, table)
    n2_step = steps[2][0]["N2"]
    k_step = steps[2][1]["K"]
    pairings = {
        "N2.K": n2_step.cycle_pairings[0],
        "K.K": n2_step.table.pairing_value("K", "K"),
    }
    _expect("pairings", (2, 2), (pairings["N2.K"], pairings["K.K"]))

    d_sum = table.class_from({2: {"d1": 1, "d2": 1}})
    _expect("N1", table.class_from({4: {"p1": 1, "p2": 1}}), classes[1])
    _expect("K", d_sum, lift_codim1(k_step))
    _expect("N2", d_sum, classes[2])

    c_hat = mather_from_polar(classes, H.n, table)
    _expect(
        "c_hat",
        table.class_from(
            {6: {"X": 1}, 4: {"p1": 3, "p2": 3}, 2: {"d1": 4, "d2": 4}, 0: {"pt": 6}}
        ),
        c_hat,
    )
    _expect("c_hat.integral", True, c_hat.is_integral())
    csm = csm_isolated(c_hat, example.singular_points, example.point_summands)
    _expect("csm.vertex", Fraction(-1), csm.coefficient(0, "vertex"))

    resolutions = {}
    proper_images = {}
    pushforward = {}
    expected_d = {"X1": (3, 5), "X2": (5, 3)}
    for name, (d1, d2) in expected_d.items():
        proper, c_resolution = resolution_class(name, classes, table)
        twice = 2 if name == "X1" else 0
        _expect(
            f"N2_tilde.{name}",
            table.class_from({2: {"d1": 2 - twice, "d2": twice}}),
            proper,
        )
        _expect(
            f"c_{name}",
            table.class_from(
                {6: {"X": 1}, 4: {"p1": 3, "p2": 3}, 2: {"d1": d1, "d2": d2}, 0: {"pt": 6}}
            ),
            c_resolution,
        )
        difference = c_hat - c_resolution
        _expect(f"pushforward.{name}.degrees", [2], difference.nonzero_degrees())
        _expect(f"pushforward.{name}.cap", True, table.cap_hyperplane(difference).is_zero())
        proper_images[name] = proper
        resolutions[name] = c_resolution
        pushforward[name] = difference
    _expect("N2_tilde.differs", True, proper_images["X1"] != classes[2])

    ih = cone_ih_betti(ConeInput(QUADRIC_BASE_BETTI, 0))
    _expect("ih", (1, 0, 2, 0, 2, 0, 1), tuple(ih))
    conic = plane_curve_betti(2)
    link = a1_link_betti(2, conic[0], conic[1], conic[2])
    _expect("link", (1, 0, 0, 1), tuple(link))
    _expect("N1.rational_homology_manifold", True, is_rational_homology_manifold_cone(2))
    n1_ih = cone_ih_betti(plane_curve_cone_input(2))
    _expect("N1.ih", tuple(thom_homology(conic)), tuple(n1_ih))

    return {
        "hypersurface": H.name,
        "polar": chain.to_json(),
        "degrees": [step.degree for step in chain.steps],
        "cycles": {
            name: [str(g) for g in ideal.generators]
            for name, ideal in catalog.quadric_cone_cycles().items()
        },
        "N1": classes[1],
        "N2": classes[2],
        "K": lift_codim1(k_step),
        "pairings": pairings,
        "c_hat": c_hat,
        "csm": csm,
        "c_X1": resolutions["X1"],
        "c_X2": resolutions["X2"],
        "N2_tilde": proper_images,
        "pushforward": pushforward,
        "ih": ih,
        "link": link,
        "N1_ih": n1_ih,
    }
