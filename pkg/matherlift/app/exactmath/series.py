from fractions import Fraction
from gettext import gettext as _

from matherlift.app.exceptions import IndeterminateOrderError, PreconditionError


class PowerSeries1:
    """
    A univariate power series truncated after ``t^truncation``.

    Arithmetic between series of different truncations keeps the smaller one, since terms beyond
    it are unknown.
    """

    __slots__ = ("variable", "truncation", "coefficients")

    def __init__(self, coefficients, truncation, variable="t"):
        if truncation < 0:
            raise PreconditionError(_("Truncation must be nonnegative."), truncation=truncation)
        coefficients = [Fraction(c) for c in coefficients][: truncation + 1]
        coefficients += [Fraction(0)] * (truncation + 1 - len(coefficients))
        self.variable = variable
        self.truncation = truncation
        self.coefficients = tuple(coefficients)

    @classmethod
    def monomial(cls, power, truncation, coefficient=1, variable="t"):
        coefficients = [0] * (power + 1)
        coefficients[power] = coefficient
        return cls(coefficients, truncation, variable)

    @property
    def is_zero(self):
        return not any(self.coefficients)

    def _combine(self, other, sign):
        if not isinstance(other, PowerSeries1):
            return NotImplemented
        truncation = min(self.truncation, other.truncation)
        return PowerSeries1(
            [a + sign * b for a, b in zip(self.coefficients, other.coefficients)],
            truncation,
            self.variable,
        )

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries1(
                [c * other for c in self.coefficients], self.truncation, self.variable
            )
        if not isinstance(other, PowerSeries1):
            return NotImplemented
        truncation = min(self.truncation, other.truncation)
        product = [Fraction(0)] * (truncation + 1)
        for i, a in enumerate(self.coefficients[: truncation + 1]):
            if a:
                for j, b in enumerate(other.coefficients[: truncation + 1 - i]):
                    product[i + j] += a * b
        return PowerSeries1(product, truncation, self.variable)

    __rmul__ = __mul__

    def derivative(self):
        """Differentiate; the result is known one order less precisely."""
        if self.truncation == 0:
            raise PreconditionError(_("Cannot differentiate a series truncated at t^0."))
        return PowerSeries1(
            [k * c for k, c in enumerate(self.coefficients)][1:],
            self.truncation - 1,
            self.variable,
        )

    def order(self):
        return series_order(self)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries1):
            return NotImplemented
        return (self.truncation, self.coefficients) == (other.truncation, other.coefficients)

    def __hash__(self):
        return hash((self.truncation, self.coefficients))

    def __repr__(self):
        shown = " + ".join(
            f"{c}*{self.variable}^{k}" for k, c in enumerate(self.coefficients) if c
        )
        return f"PowerSeries1({shown or '0'} + O({self.variable}^{self.truncation + 1}))"


def series_order(series):
    """
    Return the smallest exponent with a nonzero coefficient.

    Raises:
        IndeterminateOrderError: If the series is zero up to its truncation.

    """
    for k, c in enumerate(series.coefficients):
        if c:
            return k
    raise IndeterminateOrderError(series.truncation)
