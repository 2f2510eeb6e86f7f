import logging

from gettext import gettext as _

from matherlift.constants import ELIMINATION_VARIABLE
from matherlift.app.conf import settings
from matherlift.app.exceptions import SaturationLimitError, VariableContextError
from matherlift.app.exactmath.groebner import groebner
from matherlift.app.exactmath.polynomial import DEGREVLEX, Ideal, MultiPoly, block_order

log = logging.getLogger(__name__)


def _check_ambient(I, J):
    if I.ambient != J.ambient:
        raise VariableContextError(I.ambient, J.ambient)


def _fresh_name(ambient):
    name = ELIMINATION_VARIABLE
    while name in ambient:
        name = "_" + name
    return name


def ideal_sum(I, J):
    return I + J


def ideal_contains(I, J):
    """Return True if every generator of ``J`` lies in ``I``."""
    _check_ambient(I, J)
    basis = groebner(I)
    return all(basis.contains(g) for g in J.generators)


def ideals_equal(I, J):
    _check_ambient(I, J)
    return groebner(I) == groebner(J)


def is_unit_ideal(I):
    return groebner(I).is_unit


def eliminate(I, count):
    """
    Eliminate the first ``count`` variables of the ambient tuple.

    Returns:
        Ideal: The elimination ideal over the remaining variables.

    """
    basis = groebner(I, block_order(count))
    kept = [g.drop(count) for g in basis if not any(any(e[:count]) for e in g.terms)]
    return Ideal(I.ambient[count:], kept)


def ideal_intersection(I, J):
    """Return I ∩ J, computed by eliminating t from t*I + (1 - t)*J."""
    _check_ambient(I, J)
    if not I.generators or not J.generators:
        return Ideal(I.ambient)
    t_name = _fresh_name(I.ambient)
    t = MultiPoly.variable((t_name,) + I.ambient, t_name)
    generators = [t * g.extend((t_name,)) for g in I.generators]
    generators += [(1 - t) * g.extend((t_name,)) for g in J.generators]
    return eliminate(Ideal(t.variables, generators), 1)


def ideal_quotient_by(I, g):
    """Return I : g for a single polynomial ``g``."""
    basis = groebner(I)
    if basis.contains(g):
        return Ideal.unit(I.ambient)
    meet = ideal_intersection(I, Ideal(I.ambient, [g]))
    return Ideal(I.ambient, [h.exact_divide(g) for h in meet.generators])


def ideal_quotient(I, J):
    """Return I : J as the intersection of I : g over the generators g of J."""
    _check_ambient(I, J)
    result = None
    for g in groebner(J).basis:
        part = ideal_quotient_by(I, g)
        if groebner(part).is_unit:
            continue
        result = part if result is None else ideal_intersection(result, part)
    return Ideal.unit(I.ambient) if result is None else result


def ideal_saturate(I, J, max_iterations=None):
    """
    Return the saturation I : J^∞ by iterated quotients.

    Args:
        I (Ideal): The ideal to saturate.
        J (Ideal): The ideal whose zero set is removed.
        max_iterations (int): Quotient steps allowed before giving up; defaults to the
            ``MAX_SATURATION_ITERATIONS`` setting.

    Returns:
        Ideal: Generated by the reduced degrevlex basis of the saturation.

    Raises:
        SaturationLimitError: If the chain of quotients does not stabilize.

    """
    _check_ambient(I, J)
    if max_iterations is None:
        max_iterations = settings.MAX_SATURATION_ITERATIONS
    J = groebner(J).as_ideal()
    current = groebner(I, DEGREVLEX)
    for iteration in range(1, max_iterations + 1):
        if current.is_unit:
            return current.as_ideal()
        following = groebner(ideal_quotient(current.as_ideal(), J), DEGREVLEX)
        if following == current:
            log.debug(_("Saturation stabilized after {} quotients").format(iteration))
            return following.as_ideal()
        current = following
    raise SaturationLimitError(max_iterations)
