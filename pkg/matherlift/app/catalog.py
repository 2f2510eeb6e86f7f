"""
Built-in examples: embedded hypersurface documents, their homology tables and lift plans.

Intersection numbers needed by the lift plans are computed from the polar ideals: the degree of
the sum of the ideals of two properly meeting cycles counts their intersection points.
"""
import json
import logging
from fractions import Fraction
from gettext import gettext as _
from typing import Callable, NamedTuple, Optional, Tuple

from matherlift.constants import EXAMPLE
from matherlift.app.chernring import IntersectionTable
from matherlift.app.exceptions import GenericityFailure, InputInvalid
from matherlift.app.exactmath import Ideal, MultiPoly, groebner, hilbert_dim_degree
from matherlift.app.grassmann import Flag
from matherlift.app.lift import LiftStep, LocalParam
from matherlift.app.polar import Hypersurface
from matherlift.app.utils import ideal_from_json

log = logging.getLogger(__name__)

QUADRIC_CONE_JSON = """
{
    "name": "quadric_cone",
    "f": {
        "vars": ["z0", "z1", "z2", "z3", "z4"],
        "terms": [
            {"c": "1", "e": [1, 0, 0, 1, 0]},
            {"c": "-1", "e": [0, 1, 1, 0, 0]}
        ]
    }
}
"""

NODE_JSON = """
{
    "name": "node",
    "f": {"vars": ["x", "y", "z"], "terms": [{"c": "1", "e": [1, 1, 0]}]}
}
"""

CUSP_JSON = """
{
    "name": "cusp",
    "f": {
        "vars": ["x", "y", "z"],
        "terms": [
            {"c": "1", "e": [3, 0, 0]},
            {"c": "1", "e": [0, 2, 1]}
        ]
    }
}
"""

SMOOTH_CONIC_JSON = """
{
    "name": "smooth_conic",
    "f": {
        "vars": ["x", "y", "z"],
        "terms": [
            {"c": "1", "e": [1, 0, 1]},
            {"c": "-1", "e": [0, 2, 0]}
        ]
    }
}
"""

SMOOTH_QUADRIC_JSON = """
{
    "name": "smooth_quadric",
    "f": {
        "vars": ["z0", "z1", "z2", "z3"],
        "terms": [
            {"c": "1", "e": [1, 0, 0, 1]},
            {"c": "-1", "e": [0, 1, 1, 0]}
        ]
    }
}
"""

PROJECTIVE_PLANE_JSON = """
{
    "name": "projective_plane",
    "f": {"vars": ["z0", "z1", "z2", "z3"], "terms": [{"c": "1", "e": [0, 0, 0, 1]}]}
}
"""

# Flag of the worked quadric cone computation: e0-e3, e1-e2, e0, e1, e4.
QUADRIC_CONE_FLAG_ROWS = [
    [1, 0, 0, -1, 0],
    [0, 1, -1, 0, 0],
    [1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1],
]

# Test cycles of the quadric cone as coordinate subspaces of P^4.
QUADRIC_CONE_CYCLES_JSON = """
{
    "p1": [
        {"vars": ["z0", "z1", "z2", "z3", "z4"], "terms": [{"c": "1", "e": [0, 1, 0, 0, 0]}]},
        {"vars": ["z0", "z1", "z2", "z3", "z4"], "terms": [{"c": "1", "e": [0, 0, 0, 1, 0]}]}
    ],
    "p2": [
        {"vars": ["z0", "z1", "z2", "z3", "z4"], "terms": [{"c": "1", "e": [0, 0, 1, 0, 0]}]},
        {"vars": ["z0", "z1", "z2", "z3", "z4"], "terms": [{"c": "1", "e": [0, 0, 0, 1, 0]}]}
    ],
    "d1": [
        {"vars": ["z0", "z1", "z2", "z3", "z4"], "terms": [{"c": "1", "e": [0, 1, 0, 0, 0]}]},
        {"vars": ["z0", "z1", "z2", "z3", "z4"], "terms": [{"c": "1", "e": [0, 0, 0, 1, 0]}]},
        {"vars": ["z0", "z1", "z2", "z3", "z4"], "terms": [{"c": "1", "e": [0, 0, 0, 0, 1]}]}
    ],
    "d2": [
        {"vars": ["z0", "z1", "z2", "z3", "z4"], "terms": [{"c": "1", "e": [0, 0, 1, 0, 0]}]},
        {"vars": ["z0", "z1", "z2", "z3", "z4"], "terms": [{"c": "1", "e": [0, 0, 0, 1, 0]}]},
        {"vars": ["z0", "z1", "z2", "z3", "z4"], "terms": [{"c": "1", "e": [0, 0, 0, 0, 1]}]}
    ],
    "infinity": [
        {"vars": ["z0", "z1", "z2", "z3", "z4"], "terms": [{"c": "1", "e": [0, 0, 0, 0, 1]}]}
    ]
}
"""

# Intersection numbers with p1, p2 of the proper inverse image of N^2 in the two small
# resolutions; each resolution replaces the vertex by one of the two rulings.
RESOLUTION_N2_PAIRINGS = {"X1": (2, 0), "X2": (0, 2)}


def _linear_ideal(variables, names):
    return Ideal(variables, [MultiPoly.variable(variables, name) for name in names])


def intersection_number(*ideals):
    """
    Return the number of intersection points of the given cycles, counted with multiplicity.

    Raises:
        GenericityFailure: If the cycles do not meet in finitely many points.

    """
    total = ideals[0]
    for ideal in ideals[1:]:
        total = total + ideal
    data = hilbert_dim_degree(groebner(total))
    if data.is_empty:
        return Fraction(0)
    if data.projective_dimension != 0:
        raise GenericityFailure(
            _("Cycles do not meet properly."), dimension=data.projective_dimension
        )
    return Fraction(data.degree)


def quadric_cone_table():
    """
    Homology of the cone over ``P^1 x P^1``.

    ``p1, p2`` are the cones over the two rulings, ``d1, d2`` the lines of the rulings and ``b``
    acts as ``[X] -> p1 + p2``, ``p_i -> d_i``, ``d_i -> [pt]``.
    """
    return IntersectionTable(
        3,
        {6: ("X",), 4: ("p1", "p2"), 2: ("d1", "d2"), 0: ("pt",)},
        hyperplane_action={6: [[1], [1]], 4: [[1, 0], [0, 1]], 2: [[1, 1]]},
        pairing={
            ("X", "pt"): 1,
            ("p1", "d1"): 0,
            ("p1", "d2"): 1,
            ("p2", "d1"): 1,
            ("p2", "d2"): 0,
        },
    )


def quadric_cone_cycles():
    """Ideals of the generators ``p1, p2, d1, d2`` and of the hyperplane at infinity."""
    documents = json.loads(QUADRIC_CONE_CYCLES_JSON)
    return {name: ideal_from_json(data) for name, data in documents.items()}


def quadric_cone_lift_steps(chain, table):
    """
    Lift data for the quadric cone.

    ``[N^1]`` is read off against ``d1, d2``. ``[N^2]`` first lifts into ``N^1``, whose middle
    homology is generated by its hyperplane section ``K = N^1 ∩ {z4 = 0}``, then ``K`` lifts into
    ``X`` against ``p1, p2``.
    """
    cycles = quadric_cone_cycles()
    steps = {}
    first = chain.step(1)
    if first is not None:
        steps[1] = [
            {
                "N1": LiftStep(
                    "X",
                    table,
                    tuple(intersection_number(first.ideal, cycles[d]) for d in ("d1", "d2")),
                    4,
                )
            }
        ]
    second = chain.step(2)
    if second is not None:
        section = first.ideal + cycles["infinity"]
        k_degree = hilbert_dim_degree(groebner(section)).degree
        n1_table = IntersectionTable(
            2,
            {4: ("N1",), 2: ("K",), 0: ("pt",)},
            hyperplane_action={4: [[1]], 2: [[k_degree]]},
            pairing={("N1", "pt"): 1, ("K", "K"): k_degree},
        )
        steps[2] = [
            {
                "N2": LiftStep(
                    "N1", n1_table, (intersection_number(second.ideal, cycles["infinity"]),), 2
                )
            },
            {
                "K": LiftStep(
                    "X",
                    table,
                    tuple(intersection_number(section, cycles[p]) for p in ("p1", "p2")),
                    2,
                )
            },
        ]
    return steps


def curve_table(components, degrees):
    """Homology of a plane curve with the given irreducible components and their degrees."""
    count = len(components)
    points = tuple(f"pt{k + 1}" for k in range(count)) if count > 1 else ("pt",)
    action = [[degrees[j] if j == k else 0 for j in range(count)] for k in range(count)]
    return IntersectionTable(
        1,
        {2: tuple(components), 0: points},
        hyperplane_action={2: action},
        pairing={(c, p): 1 for c, p in zip(components, points)},
    )


def node_table():
    return curve_table(("X1", "X2"), (1, 1))


def cusp_table():
    return curve_table(("X",), (3,))


def smooth_conic_table():
    return curve_table(("X",), (2,))


def _curve_lift_steps(component_ideals):
    def build(chain, table):
        first = chain.step(1)
        if first is None:
            return {}
        variables = chain.hypersurface.ambient_vars
        pairings = []
        for name in table.generators[2]:
            ideal = component_ideals(variables).get(name, chain.hypersurface.ideal)
            pairings.append(intersection_number(first.ideal, ideal))
        return {1: [{"N1": LiftStep("X", table, tuple(pairings), 0)}]}

    return build


def smooth_quadric_table():
    """Homology of ``P^1 x P^1`` with the rulings ``l1, l2``."""
    return IntersectionTable(
        2,
        {4: ("B",), 2: ("l1", "l2"), 0: ("pt",)},
        hyperplane_action={4: [[1], [1]], 2: [[1, 1]]},
        pairing={("B", "pt"): 1, ("l1", "l2"): 1, ("l1", "l1"): 0, ("l2", "l2"): 0},
    )


def smooth_quadric_lift_steps(chain, table):
    variables = chain.hypersurface.ambient_vars
    steps = {}
    first = chain.step(1)
    if first is not None:
        lines = {"l1": ("z1", "z3"), "l2": ("z2", "z3")}
        steps[1] = [
            {
                "N1": LiftStep(
                    "B",
                    table,
                    tuple(
                        intersection_number(first.ideal, _linear_ideal(variables, lines[name]))
                        for name in table.generators[2]
                    ),
                    2,
                )
            }
        ]
    second = chain.step(2)
    if second is not None:
        steps[2] = [{"N2": LiftStep("B", table, (Fraction(second.degree),), 0)}]
    return steps


def projective_plane_table():
    return IntersectionTable(
        2,
        {4: ("X",), 2: ("L",), 0: ("pt",)},
        hyperplane_action={4: [[1]], 2: [[1]]},
        pairing={("X", "pt"): 1, ("L", "L"): 1},
    )


def _no_lift_steps(chain, table):
    return {}


class BuiltinExample(NamedTuple):
    """An embedded example with everything needed to run it end to end."""

    name: str
    document: str
    table: Callable
    lift_steps: Callable
    flag_rows: Optional[list] = None
    # (generator name, Euler obstruction) for singular points with a fixed obstruction
    singular_points: Tuple[Tuple[str, int], ...] = ()
    # point names that get their own degree 0 generator in the CSM class
    point_summands: Tuple[str, ...] = ()
    # point name -> local branches, for curves whose obstruction is computed
    branches: Optional[Callable] = None

    def hypersurface(self):
        return Hypersurface.from_json(json.loads(self.document))

    def flag(self):
        return Flag.from_rows(self.flag_rows) if self.flag_rows else None


def cusp_branches(truncation):
    """The cusp ``x^3 + y^2 z`` near ``[0:0:1]`` is ``t -> (-t^2, t^3)``."""
    return {"pt": (LocalParam.from_coefficients([[0, 0, -1], [0, 0, 0, 1]], truncation),)}


def node_branches(truncation):
    return {
        "node": (
            LocalParam.from_coefficients([[0, 1], [0]], truncation),
            LocalParam.from_coefficients([[0], [0, 1]], truncation),
        )
    }


def _component_ideals(*names):
    def build(variables):
        return {
            component: _linear_ideal(variables, (coordinate,))
            for component, coordinate in zip(("X1", "X2"), names)
        }

    return build


BUILTIN_EXAMPLES = {
    EXAMPLE.QUADRIC_CONE: BuiltinExample(
        EXAMPLE.QUADRIC_CONE,
        QUADRIC_CONE_JSON,
        quadric_cone_table,
        quadric_cone_lift_steps,
        flag_rows=QUADRIC_CONE_FLAG_ROWS,
        singular_points=(("vertex", 2),),
        point_summands=("vertex",),
    ),
    EXAMPLE.NODE: BuiltinExample(
        EXAMPLE.NODE,
        NODE_JSON,
        node_table,
        _curve_lift_steps(_component_ideals("x", "y")),
        point_summands=("node",),
        branches=node_branches,
    ),
    EXAMPLE.CUSP: BuiltinExample(
        EXAMPLE.CUSP,
        CUSP_JSON,
        cusp_table,
        _curve_lift_steps(lambda variables: {}),
        branches=cusp_branches,
    ),
    EXAMPLE.SMOOTH_CONIC: BuiltinExample(
        EXAMPLE.SMOOTH_CONIC,
        SMOOTH_CONIC_JSON,
        smooth_conic_table,
        _curve_lift_steps(lambda variables: {}),
    ),
    EXAMPLE.SMOOTH_QUADRIC: BuiltinExample(
        EXAMPLE.SMOOTH_QUADRIC,
        SMOOTH_QUADRIC_JSON,
        smooth_quadric_table,
        smooth_quadric_lift_steps,
    ),
    EXAMPLE.PROJECTIVE_PLANE: BuiltinExample(
        EXAMPLE.PROJECTIVE_PLANE,
        PROJECTIVE_PLANE_JSON,
        projective_plane_table,
        _no_lift_steps,
    ),
}


def get_example(name):
    """
    Return the built-in example called ``name``.

    Raises:
        InputInvalid: For an unknown name.

    """
    try:
        return BUILTIN_EXAMPLES[name]
    except KeyError:
        raise InputInvalid(
            _("Unknown built-in example."), name=name, known=sorted(BUILTIN_EXAMPLES)
        )
