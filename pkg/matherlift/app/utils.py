import json
import logging

from fractions import Fraction
from gettext import gettext as _

from jsonschema import ValidationError, validate

from matherlift.constants import SPLITMIX_GAMMA, SPLITMIX_MIX_1, SPLITMIX_MIX_2, UINT64_MASK
from matherlift.app.conf import settings
from matherlift.app.exceptions import InputInvalid
from matherlift.app.exactmath.polynomial import (
    Ideal,
    MultiPoly,
    format_rational,
    parse_rational,
)
from matherlift.app.json_schemas import (
    CONE_INPUT_SCHEMA,
    FLAG_SCHEMA,
    HYPERSURFACE_SCHEMA,
    IDEAL_SCHEMA,
    POLYNOMIAL_SCHEMA,
)

log = logging.getLogger(__name__)


class SeededSource:
    """
    A splitmix64 stream of pseudo-random numbers.

    Every randomized choice in the package draws from one of these so that a run is reproducible
    from its seed alone.
    """

    def __init__(self, seed=None):
        self.seed = settings.SEED if seed is None else int(seed)
        self._state = self.seed & UINT64_MASK

    def next_u64(self):
        self._state = (self._state + SPLITMIX_GAMMA) & UINT64_MASK
        z = self._state
        z = ((z ^ (z >> 30)) * SPLITMIX_MIX_1) & UINT64_MASK
        z = ((z ^ (z >> 27)) * SPLITMIX_MIX_2) & UINT64_MASK
        return z ^ (z >> 31)

    def integer(self, low, high):
        """Return an integer uniformly drawn from ``[low, high]``."""
        return low + self.next_u64() % (high - low + 1)

    def rational(self, bound=None):
        """Return a rational with numerator in ``[-bound, bound]`` and denominator 1."""
        bound = settings.RANDOM_NUMERATOR_BOUND if bound is None else bound
        return Fraction(self.integer(-bound, bound))

    def nonzero_rational(self, bound=None):
        bound = settings.RANDOM_NUMERATOR_BOUND if bound is None else bound
        value = self.integer(1, bound)
        return Fraction(value if self.next_u64() & 1 else -value)

    def vector(self, length, bound=None):
        return tuple(self.rational(bound) for _i in range(length))

    def spawn(self, salt):
        """Return an independent stream derived from this seed and ``salt``."""
        return SeededSource((self.seed * 1_000_003 + salt) & UINT64_MASK)


def validate_document(data, schema, what):
    """
    Validate JSON data against a schema.

    Raises:
        InputInvalid: On the first schema violation, naming its path.

    """
    try:
        validate(data, schema)
    except ValidationError as error:
        # fail on the first encountered error
        raise InputInvalid(
            _("Invalid {} document.").format(what),
            reason=f'{".".join(map(str, error.path))}: {error.message}',
        )


def load_json_file(path):
    """
    Read a JSON document from ``path``.

    Raises:
        InputInvalid: If the file is missing or does not parse.

    """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError:
        raise InputInvalid(_("Input file not found."), path=str(path))
    except (OSError, json.JSONDecodeError) as error:
        raise InputInvalid(_("Input file is not readable JSON."), path=str(path), reason=str(error))


def _parse_rational_field(value, where):
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError):
        raise InputInvalid(_("Malformed rational number."), value=str(value), where=where)


def polynomial_from_json(data):
    validate_document(data, POLYNOMIAL_SCHEMA, "polynomial")
    variables = tuple(data["vars"])
    terms = {}
    for term in data["terms"]:
        exponent = tuple(term["e"])
        if len(exponent) != len(variables):
            raise InputInvalid(
                _("Exponent length does not match the variables."), exponent=list(exponent)
            )
        terms[exponent] = terms.get(exponent, 0) + _parse_rational_field(term["c"], "terms.c")
    return MultiPoly(variables, terms)


def polynomial_to_json(polynomial):
    return {
        "vars": list(polynomial.variables),
        "terms": [
            {"c": format_rational(c), "e": list(e)} for e, c in polynomial.sorted_terms()
        ],
    }


def ideal_from_json(data, variables=None):
    """
    Read an ideal given as an array of polynomials or as ``{"vars", "generators"}``.

    ``variables`` names the ring of an empty generator array.

    Raises:
        InputInvalid: If the generators use different variables.

    """
    validate_document(data, IDEAL_SCHEMA, "ideal")
    if isinstance(data, dict):
        variables, data = data["vars"], data["generators"]
    generators = [polynomial_from_json(g) for g in data]
    if variables is None:
        if not generators:
            raise InputInvalid(_("An empty ideal needs its variables."))
        variables = generators[0].variables
    if any(tuple(g.variables) != tuple(variables) for g in generators):
        raise InputInvalid(
            _("Generators must use the ideal's variables."), variables=list(variables)
        )
    return Ideal(variables, generators)


def ideal_to_json(ideal):
    return [polynomial_to_json(g) for g in ideal.generators]


def hypersurface_document(data):
    """Return ``(name, polynomial)`` from a hypersurface document."""
    validate_document(data, HYPERSURFACE_SCHEMA, "hypersurface")
    return data.get("name"), polynomial_from_json(data["f"])


def matrix_rows_from_json(data):
    validate_document(data, FLAG_SCHEMA, "flag")
    return [[_parse_rational_field(x, "flag") for x in row] for row in data]


def matrix_rows_to_json(matrix):
    return [[format_rational(x) for x in row] for row in matrix.rows]


def cone_document(data):
    validate_document(data, CONE_INPUT_SCHEMA, "cone input")
    return tuple(data["base_betti"]), data["middle_pd_rank"]


def to_jsonable(value):
    """``json.dumps`` fallback for the package's exact values and report objects."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, MultiPoly):
        return str(value)
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (set, frozenset, tuple)):
        return list(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def dump_report(report):
    return json.dumps(report, indent=2, default=to_jsonable)
