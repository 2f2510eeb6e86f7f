"""
Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a mapping from exponent tuples to nonzero ``Fraction`` values over an ordered
tuple of variable names. Zero coefficients are never stored.
"""
from fractions import Fraction
from gettext import gettext as _
from types import MappingProxyType

from matherlift.constants import MONOMIAL_ORDER
from matherlift.app.exceptions import (
    NonExactDivisionError,
    PreconditionError,
    VariableContextError,
)


def _degrevlex_key(exponent):
    return (sum(exponent), tuple(-e for e in reversed(exponent)))


class MonomialOrder:
    """
    A total order on exponent tuples, used through its sort ``key``.

    ``lex`` compares exponents lexicographically, ``degrevlex`` compares total degree and breaks
    ties by the reverse lexicographic rule, and ``block`` compares the first ``split`` variables
    by degrevlex before looking at the remaining ones.
    """

    __slots__ = ("name", "split")

    def __init__(self, name=MONOMIAL_ORDER.DEGREVLEX, split=None):
        if name not in (MONOMIAL_ORDER.LEX, MONOMIAL_ORDER.DEGREVLEX, MONOMIAL_ORDER.BLOCK):
            raise PreconditionError(_("Unknown monomial order."), order=name)
        if name == MONOMIAL_ORDER.BLOCK and (split is None or split < 1):
            raise PreconditionError(_("Block order needs a positive split."), split=split)
        self.name = name
        self.split = split

    def key(self, exponent):
        if self.name == MONOMIAL_ORDER.LEX:
            return exponent
        if self.name == MONOMIAL_ORDER.DEGREVLEX:
            return _degrevlex_key(exponent)
        return _degrevlex_key(exponent[: self.split]) + _degrevlex_key(exponent[self.split :])

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.name == other.name
            and self.split == other.split
        )

    def __hash__(self):
        return hash((self.name, self.split))

    def __repr__(self):
        if self.split is None:
            return f"MonomialOrder({self.name!r})"
        return f"MonomialOrder({self.name!r}, split={self.split})"


LEX = MonomialOrder(MONOMIAL_ORDER.LEX)
DEGREVLEX = MonomialOrder(MONOMIAL_ORDER.DEGREVLEX)


def block_order(split):
    """Return the elimination order for the first ``split`` variables."""
    return MonomialOrder(MONOMIAL_ORDER.BLOCK, split=split)


def monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_quotient(a, b):
    return tuple(x - y for x, y in zip(a, b))


def parse_rational(text):
    """
    Parse a rational string such as ``"-3/4"`` or ``"5"``.

    Raises:
        ValueError: If the text is malformed or the denominator is zero.

    """
    if isinstance(text, int):
        return Fraction(text)
    numerator, _sep, denominator = str(text).partition("/")
    if denominator and int(denominator) == 0:
        raise ValueError(_("Zero denominator in {}").format(text))
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class MultiPoly:
    """An immutable polynomial over a fixed tuple of variable names."""

    __slots__ = ("variables", "_terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        clean = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != len(self.variables) or any(e < 0 for e in exponent):
                raise PreconditionError(
                    _("Exponent does not fit the variables."),
                    exponent=list(exponent),
                    variables=list(self.variables),
                )
            coefficient = Fraction(coefficient)
            if coefficient:
                clean[exponent] = coefficient
        self._terms = clean

    @classmethod
    def zero(cls, variables):
        return cls(variables)

    @classmethod
    def constant(cls, variables, value):
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        if name not in variables:
            raise PreconditionError(_("Unknown variable."), name=name)
        exponent = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exponent: 1})

    @classmethod
    def linear_form(cls, variables, coefficients):
        """Return sum(c_k * x_k) for the given coefficient vector."""
        variables = tuple(variables)
        if len(coefficients) != len(variables):
            raise PreconditionError(_("Coefficient vector has the wrong length."))
        terms = {}
        for k, c in enumerate(coefficients):
            terms[tuple(1 if j == k else 0 for j in range(len(variables)))] = c
        return cls(variables, terms)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def is_zero(self):
        return not self._terms

    @property
    def is_constant(self):
        return all(not any(e) for e in self._terms)

    @property
    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    @property
    def is_homogeneous(self):
        return len({sum(e) for e in self._terms}) <= 1

    def _check_context(self, other):
        if self.variables != other.variables:
            raise VariableContextError(self.variables, other.variables)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check_context(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.variables, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_context(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                terms[exponent] = terms.get(exponent, 0) + c1 * c2
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, power):
        if power < 0:
            raise PreconditionError(_("Negative powers are not polynomials."), power=power)
        result = MultiPoly.constant(self.variables, 1)
        for _i in range(power):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiPoly.constant(self.variables, other)._terms
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self):
        return hash((self.variables, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def mul_term(self, exponent, coefficient):
        """Multiply by the single term ``coefficient * x^exponent``."""
        return MultiPoly(
            self.variables,
            {
                tuple(a + b for a, b in zip(e, exponent)): c * coefficient
                for e, c in self._terms.items()
            },
        )

    def leading_term(self, order=DEGREVLEX):
        if not self._terms:
            raise PreconditionError(_("The zero polynomial has no leading term."))
        exponent = max(self._terms, key=order.key)
        return exponent, self._terms[exponent]

    def leading_monomial(self, order=DEGREVLEX):
        return self.leading_term(order)[0]

    def monic(self, order=DEGREVLEX):
        _exponent, coefficient = self.leading_term(order)
        return self * (1 / coefficient)

    def sorted_terms(self, order=DEGREVLEX):
        """Return ``(exponent, coefficient)`` pairs, largest first."""
        return sorted(self._terms.items(), key=lambda item: order.key(item[0]), reverse=True)

    def derivative(self, index):
        terms = {}
        for exponent, coefficient in self._terms.items():
            if exponent[index]:
                lowered = exponent[:index] + (exponent[index] - 1,) + exponent[index + 1 :]
                terms[lowered] = coefficient * exponent[index]
        return MultiPoly(self.variables, terms)

    def evaluate(self, point):
        """Evaluate at a point given as a sequence of rationals."""
        total = Fraction(0)
        for exponent, coefficient in self._terms.items():
            value = coefficient
            for x, e in zip(point, exponent):
                value *= Fraction(x) ** e
            total += value
        return total

    def extend(self, names):
        """Prepend new variables (with exponent 0) to the context."""
        pad = (0,) * len(names)
        terms = {pad + e: c for e, c in self._terms.items()}
        return MultiPoly(tuple(names) + self.variables, terms)

    def drop(self, count):
        """Remove the first ``count`` variables, which must not occur."""
        terms = {}
        for exponent, coefficient in self._terms.items():
            if any(exponent[:count]):
                raise PreconditionError(_("Dropped variables still occur."))
            terms[exponent[count:]] = coefficient
        return MultiPoly(self.variables[count:], terms)

    def exact_divide(self, divisor, order=DEGREVLEX):
        """
        Divide by ``divisor`` assuming the division leaves no remainder.

        Raises:
            NonExactDivisionError: If a remainder appears.

        """
        self._check_context(divisor)
        lead, lead_coefficient = divisor.leading_term(order)
        remainder = dict(self._terms)
        quotient = {}
        while remainder:
            top = max(remainder, key=order.key)
            if not monomial_divides(lead, top):
                raise NonExactDivisionError(dividend=str(self), divisor=str(divisor))
            shift = monomial_quotient(top, lead)
            factor = remainder[top] / lead_coefficient
            quotient[shift] = factor
            for exponent, coefficient in divisor._terms.items():
                moved = tuple(a + b for a, b in zip(exponent, shift))
                value = remainder.get(moved, 0) - factor * coefficient
                if value:
                    remainder[moved] = value
                else:
                    remainder.pop(moved, None)
        return MultiPoly(self.variables, quotient)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exponent, coefficient in self.sorted_terms():
            monomial = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.variables, exponent)
                if e
            )
            magnitude = abs(coefficient)
            if not monomial:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{format_rational(magnitude)}*{monomial}"
            sign = "-" if coefficient < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MultiPoly({self.variables!r}, {str(self)!r})"


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def poly_scale(p, c):
    return p * Fraction(c)


def gradient(f):
    """Return the tuple of partial derivatives of ``f``."""
    return tuple(f.derivative(k) for k in range(len(f.variables)))


def linear_combination(coefficients, polynomials):
    """Return sum(c_k * p_k) over a shared variable context."""
    total = None
    for coefficient, polynomial in zip(coefficients, polynomials):
        term = polynomial * Fraction(coefficient)
        total = term if total is None else total + term
    return total


class Ideal:
    """An ideal given by generators over a shared variable tuple."""

    __slots__ = ("ambient", "generators")

    def __init__(self, ambient, generators=()):
        self.ambient = tuple(ambient)
        kept = []
        for generator in generators:
            if generator.variables != self.ambient:
                raise VariableContextError(self.ambient, generator.variables)
            if generator:
                kept.append(generator)
        self.generators = tuple(kept)

    @classmethod
    def unit(cls, ambient):
        return cls(ambient, [MultiPoly.constant(ambient, 1)])

    @property
    def is_homogeneous(self):
        return all(g.is_homogeneous for g in self.generators)

    def __add__(self, other):
        if self.ambient != other.ambient:
            raise VariableContextError(self.ambient, other.ambient)
        return Ideal(self.ambient, self.generators + other.generators)

    def __repr__(self):
        return "Ideal({})".format(", ".join(str(g) for g in self.generators))
