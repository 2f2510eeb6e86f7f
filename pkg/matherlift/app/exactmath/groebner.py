"""
Buchberger's algorithm over the rationals.

Pairs are processed with the normal selection strategy (smallest lcm of leading monomials first,
ties broken by generator indices) and pairs with coprime leading monomials are skipped. The result
is the reduced basis with monic elements, sorted by leading monomial.
"""
import logging

from matherlift.app.exactmath.polynomial import (
    DEGREVLEX,
    Ideal,
    MultiPoly,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
)

log = logging.getLogger(__name__)


def _reduce_terms(terms, divisors, key):
    """
    Fully reduce a term dictionary by monic divisors.

    Args:
        terms (dict): Exponent to coefficient mapping of the dividend.
        divisors (list): ``(leading_monomial, terms)`` pairs; each divisor is monic.
        key (callable): Sort key of the monomial order.

    Returns:
        dict: The remainder, no term of which is divisible by a leading monomial.

    """
    pending = dict(terms)
    remainder = {}
    while pending:
        top = max(pending, key=key)
        coefficient = pending[top]
        for lead, divisor in divisors:
            if monomial_divides(lead, top):
                shift = monomial_quotient(top, lead)
                for exponent, c in divisor.items():
                    moved = tuple(a + b for a, b in zip(exponent, shift))
                    value = pending.get(moved, 0) - coefficient * c
                    if value:
                        pending[moved] = value
                    else:
                        pending.pop(moved, None)
                break
        else:
            remainder[top] = coefficient
            del pending[top]
    return remainder


def _monic_terms(terms, key):
    lead = max(terms, key=key)
    inverse = 1 / terms[lead]
    return lead, {e: c * inverse for e, c in terms.items()}


def spoly(f, g, order=DEGREVLEX):
    """Return the S-polynomial of ``f`` and ``g``."""
    lead_f, coefficient_f = f.leading_term(order)
    lead_g, coefficient_g = g.leading_term(order)
    lcm = monomial_lcm(lead_f, lead_g)
    return f.mul_term(monomial_quotient(lcm, lead_f), 1 / coefficient_f) - g.mul_term(
        monomial_quotient(lcm, lead_g), 1 / coefficient_g
    )


def reduce(p, basis, order=DEGREVLEX):
    """Return the full remainder of ``p`` on division by ``basis``."""
    key = order.key
    divisors = [_monic_terms(dict(g.terms), key) for g in basis if g]
    return MultiPoly(p.variables, _reduce_terms(dict(p.terms), divisors, key))


class GroebnerBasis:
    """The reduced Gröbner basis of an ideal under a monomial order."""

    __slots__ = ("ambient", "order", "basis")

    def __init__(self, ambient, order, basis):
        self.ambient = tuple(ambient)
        self.order = order
        self.basis = tuple(basis)

    @property
    def is_unit(self):
        return len(self.basis) == 1 and self.basis[0].is_constant

    @property
    def leading_monomials(self):
        return tuple(g.leading_monomial(self.order) for g in self.basis)

    def reduce(self, p):
        return reduce(p, self.basis, self.order)

    def contains(self, p):
        return not self.reduce(p)

    def as_ideal(self):
        return Ideal(self.ambient, self.basis)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self.order == other.order
            and set(self.basis) == set(other.basis)
        )

    def __hash__(self):
        return hash((self.ambient, self.order, frozenset(self.basis)))

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __repr__(self):
        return "GroebnerBasis([{}])".format(", ".join(str(g) for g in self.basis))


def _select(pairs, basis, key):
    """Pick the pair with the smallest lcm of leading monomials."""
    def rank(pair):
        i, j = pair
        return key(monomial_lcm(basis[i][0], basis[j][0])), j, i

    return min(pairs, key=rank)


def _minimalize(basis, key):
    kept = []
    for lead, terms in sorted(basis, key=lambda item: key(item[0])):
        if not any(monomial_divides(other, lead) for other, _terms in kept):
            kept.append((lead, terms))
    return kept


def _interreduce(basis, key):
    reduced = []
    for index, (lead, terms) in enumerate(basis):
        others = basis[:index] + basis[index + 1 :]
        reduced.append((lead, _reduce_terms(terms, others, key)))
    return reduced


def groebner(ideal, order=DEGREVLEX):
    """
    Compute the reduced Gröbner basis of ``ideal``.

    Args:
        ideal (Ideal): Generators over a shared variable context.
        order (MonomialOrder): The monomial order to use.

    Returns:
        GroebnerBasis: Monic, interreduced, sorted by ascending leading monomial. The zero ideal
        has an empty basis and the unit ideal has basis ``[1]``.

    """
    key = order.key
    ambient = ideal.ambient
    basis = []
    for generator in ideal.generators:
        remainder = _reduce_terms(dict(generator.terms), basis, key)
        if remainder:
            basis.append(_monic_terms(remainder, key))
    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}
    reductions = 0

    while pairs and not any(not any(lead) for lead, _terms in basis):
        i, j = _select(pairs, basis, key)
        pairs.discard((i, j))
        lead_i, terms_i = basis[i]
        lead_j, terms_j = basis[j]
        if all(a == 0 or b == 0 for a, b in zip(lead_i, lead_j)):
            continue
        lcm = monomial_lcm(lead_i, lead_j)
        s = {}
        for lead, terms, sign in ((lead_i, terms_i, 1), (lead_j, terms_j, -1)):
            shift = monomial_quotient(lcm, lead)
            for exponent, c in terms.items():
                moved = tuple(a + b for a, b in zip(exponent, shift))
                value = s.get(moved, 0) + sign * c
                if value:
                    s[moved] = value
                else:
                    s.pop(moved, None)
        remainder = _reduce_terms(s, basis, key)
        reductions += 1
        if remainder:
            basis.append(_monic_terms(remainder, key))
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))

    if any(not any(lead) for lead, _terms in basis):
        unit = (0,) * len(ambient)
        basis = [(unit, {unit: 1})]
    basis = _interreduce(_minimalize(basis, key), key)
    log.debug("Groebner basis of %d elements after %d reductions", len(basis), reductions)
    return GroebnerBasis(
        ambient, order, [MultiPoly(ambient, terms) for _lead, terms in basis]
    )
