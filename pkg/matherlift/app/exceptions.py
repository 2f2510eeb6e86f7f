from gettext import gettext as _

from matherlift.constants import EXIT_CODE


class MatherliftError(Exception):
    """Base class carrying an error payload and the CLI exit code it maps to."""

    exit_code = EXIT_CODE.INPUT_ERROR
    default_code = "ERROR"
    default_message = _("Computation failed.")

    def __init__(self, message=None, code=None, **detail):
        """Initialize the exception with a message and structured detail."""
        self.message = message or self.default_message
        self.code = code or self.default_code
        self.detail = {
            "errors": [{"code": self.code, "message": self.message, "detail": detail}]
        }
        super().__init__(self.message)


class InputInvalid(MatherliftError):
    """Exception raised for unreadable or schema-invalid input documents."""

    default_code = "INPUT_INVALID"
    default_message = _("Invalid input document.")


class VariableContextError(MatherliftError):
    """Exception raised when polynomials over different variable tuples are mixed."""

    default_code = "VARIABLE_CONTEXT"
    default_message = _("Polynomials do not share a variable context.")

    def __init__(self, left, right):
        """Initialize the exception with both variable tuples."""
        super().__init__(left=list(left), right=list(right))


class HomogeneityError(MatherliftError):
    """Exception raised when a homogeneous input is required."""

    default_code = "NOT_HOMOGENEOUS"
    default_message = _("Polynomial is not homogeneous.")


class IndeterminateOrderError(MatherliftError):
    """Exception raised when a series vanishes up to its truncation."""

    default_code = "ORDER_INDETERMINATE"
    default_message = _("Series is zero up to truncation; increase the truncation.")

    def __init__(self, truncation):
        """Initialize the exception with the truncation used."""
        super().__init__(truncation=truncation)


class SaturationLimitError(MatherliftError):
    """Exception raised when saturation does not stabilize in time."""

    default_code = "SATURATION_LIMIT"
    default_message = _("Saturation did not stabilize.")
    exit_code = EXIT_CODE.GENERICITY_FAILURE

    def __init__(self, iterations):
        """Initialize the exception with the number of quotient steps made."""
        super().__init__(iterations=iterations)


class HilbertLimitError(MatherliftError):
    """Exception raised when a lead-term ideal has too many generators."""

    default_code = "HILBERT_LIMIT"
    default_message = _("Too many lead monomials for inclusion-exclusion.")

    def __init__(self, count, limit):
        """Initialize the exception with the generator count and its limit."""
        super().__init__(count=count, limit=limit)


class NonExactDivisionError(MatherliftError, ArithmeticError):
    """Exception raised when an exact polynomial division leaves a remainder."""

    default_code = "NON_EXACT_DIVISION"
    default_message = _("Polynomial division is not exact.")


class DimensionMismatchError(MatherliftError):
    """Exception raised on incompatible shapes or ambient dimensions."""

    default_code = "DIMENSION_MISMATCH"
    default_message = _("Dimensions do not match.")


class PreconditionError(MatherliftError):
    """Exception raised when an argument is outside its documented range."""

    default_code = "PRECONDITION"
    default_message = _("Precondition violated.")


class GenericityFailure(MatherliftError):
    """Exception raised when a seeded choice is not generic enough."""

    default_code = "GENERICITY_FAILURE"
    default_message = _("Random choice is not generic.")
    exit_code = EXIT_CODE.GENERICITY_FAILURE


class ZeroProjectionError(GenericityFailure):
    """Exception raised for an identically zero projection."""

    default_code = "ZERO_PROJECTION"
    default_message = _("Projection coefficients are all zero.")


class BadFlagError(GenericityFailure):
    """Exception raised when a polar step has the wrong codimension."""

    default_code = "BAD_FLAG"
    default_message = _("Flag is not general for this hypersurface.")

    def __init__(self, step, expected, achieved):
        """Initialize the exception with the failing step and codimensions."""
        super().__init__(step=step, expected=expected, achieved=achieved)
        self.step = step
        self.expected = expected
        self.achieved = achieved


class DegenerateInputError(GenericityFailure):
    """Exception raised when no generic choice was found within the attempt limit."""

    default_code = "DEGENERATE_INPUT"
    default_message = _("No generic choice found; input looks degenerate.")


class DegenerateBundleError(MatherliftError):
    """Exception raised for a line bundle twist of nonpositive rank."""

    default_code = "DEGENERATE_BUNDLE"
    default_message = _("Bundle rank must be at least 1.")


class NonUniqueLiftError(MatherliftError):
    """Exception raised when a pairing matrix cannot identify a class."""

    default_code = "NON_UNIQUE_LIFT"
    default_message = _("Pairing matrix is not invertible; lift is not unique.")


class UnknownGeneratorError(MatherliftError):
    """Exception raised for a generator name missing from a table."""

    default_code = "UNKNOWN_GENERATOR"
    default_message = _("Unknown homology generator.")

    def __init__(self, name):
        """Initialize the exception with the generator name."""
        super().__init__(name=name)


class PropertyViolation(MatherliftError):
    """Exception raised when a checked mathematical property fails."""

    default_code = "PROPERTY_VIOLATION"
    default_message = _("Property check failed.")
    exit_code = EXIT_CODE.PROPERTY_VIOLATION


class ScenarioFailure(PropertyViolation):
    """Exception raised when a worked scenario disagrees with its expected value."""

    default_code = "SCENARIO_FAILURE"
    default_message = _("Scenario quantity disagrees with the expected value.")

    def __init__(self, quantity, expected, actual):
        """Initialize the exception with the quantity and both values."""
        super().__init__(quantity=quantity, expected=str(expected), actual=str(actual))
        self.quantity = quantity
