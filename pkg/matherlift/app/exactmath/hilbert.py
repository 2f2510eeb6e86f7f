import logging
from typing import NamedTuple

from matherlift.app.conf import settings
from matherlift.app.exceptions import HilbertLimitError, HomogeneityError
from matherlift.app.exactmath.polynomial import monomial_lcm

log = logging.getLogger(__name__)


class HilbertData(NamedTuple):
    """Krull dimension and degree read off the Hilbert series."""

    dimension: int
    degree: int

    @property
    def projective_dimension(self):
        return self.dimension - 1 if self.dimension > 0 else -1

    @property
    def is_empty(self):
        return self.projective_dimension < 0


def hilbert_numerator(monomials, nvars):
    """
    Return the coefficients of the numerator Q(t) of the Hilbert series of a monomial ideal.

    The series of ``k[x]/M`` equals ``Q(t) / (1 - t)^nvars`` with
    ``Q(t) = sum over subsets A of (-1)^|A| t^deg(lcm A)``.
    """
    coefficients = {0: 1}
    monomials = list(monomials)

    def walk(start, lcm, sign):
        for index in range(start, len(monomials)):
            joined = monomial_lcm(lcm, monomials[index])
            degree = sum(joined)
            coefficients[degree] = coefficients.get(degree, 0) - sign
            walk(index + 1, joined, -sign)

    walk(0, (0,) * nvars, 1)
    top = max(coefficients)
    return [coefficients.get(d, 0) for d in range(top + 1)]


def _divide_by_one_minus_t(coefficients):
    """Synthetic division of Q(t) by (1 - t); Q(1) must vanish."""
    quotient = []
    running = 0
    for c in coefficients[:-1]:
        running += c
        quotient.append(running)
    return quotient


def hilbert_dim_degree(basis):
    """
    Compute Krull dimension and degree of a homogeneous ideal from its Gröbner basis.

    Args:
        basis (GroebnerBasis): A Gröbner basis of a homogeneous ideal, under any order.

    Returns:
        HilbertData: ``(-1, 0)`` for the unit ideal.

    Raises:
        HomogeneityError: If a basis element is not homogeneous.
        HilbertLimitError: If there are more lead monomials than inclusion-exclusion allows.

    """
    for g in basis.basis:
        if not g.is_homogeneous:
            raise HomogeneityError(polynomial=str(g))
    nvars = len(basis.ambient)
    leads = basis.leading_monomials
    if len(leads) > settings.MAX_HILBERT_GENERATORS:
        raise HilbertLimitError(len(leads), settings.MAX_HILBERT_GENERATORS)
    numerator = hilbert_numerator(leads, nvars)
    if not any(numerator):
        return HilbertData(-1, 0)
    poles = nvars
    while sum(numerator) == 0:
        numerator = _divide_by_one_minus_t(numerator)
        poles -= 1
    log.debug("Hilbert numerator %s over (1-t)^%d", numerator, poles)
    return HilbertData(poles, sum(numerator))
