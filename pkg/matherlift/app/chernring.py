"""
Graded homology classes and the Chern class calculus built on them.

Classes are stored homologically: ``c^i`` of an ``n``-dimensional ``X`` sits in degree
``2(n - i)``. Multiplication by the hyperplane class is the degree-lowering action recorded in an
``IntersectionTable``.
"""
import logging
from fractions import Fraction
from gettext import gettext as _
from math import comb, factorial

from matherlift.app.exceptions import (
    DegenerateBundleError,
    DimensionMismatchError,
    PreconditionError,
    UnknownGeneratorError,
)
from matherlift.app.exactmath.linalg import RationalMatrix
from matherlift.app.exactmath.polynomial import format_rational

log = logging.getLogger(__name__)


def binom(p, q):
    """
    Return the generalized binomial coefficient ``p choose q``.

    ``p`` may be negative (polynomial extension); the result is 0 when ``0 <= p < q``.
    """
    if q < 0:
        return 0
    if p >= 0:
        return comb(p, q)
    numerator = 1
    for r in range(q):
        numerator *= p - r
    return numerator // factorial(q)


def chern_tensor_coefficients(k, i):
    """Return ``binom(k - i + j, j)`` for ``j = 0..i``, the weights of ``a^j c_{i-j}``."""
    return tuple(binom(k - i + j, j) for j in range(i + 1))


def _layout(generators):
    return {int(d): tuple(names) for d, names in sorted(generators.items())}


class GradedClass:
    """
    A rational combination of named generators, grouped by even homological degree.

    Two classes can be added only when they share the same generator layout.
    """

    __slots__ = ("generators", "coefficients")

    def __init__(self, generators, coefficients=None):
        self.generators = _layout(generators)
        coefficients = coefficients or {}
        self.coefficients = {}
        for degree, names in self.generators.items():
            values = tuple(Fraction(c) for c in coefficients.get(degree, (0,) * len(names)))
            if len(values) != len(names):
                raise DimensionMismatchError(
                    _("Coefficients do not match the generators."),
                    degree=degree,
                    generators=list(names),
                )
            self.coefficients[degree] = values
        unknown = set(coefficients) - set(self.generators)
        if unknown:
            raise DimensionMismatchError(
                _("Coefficients in undeclared degrees."), degrees=sorted(unknown)
            )

    @classmethod
    def from_terms(cls, generators, terms):
        """Build a class from ``{degree: {name: coefficient}}``."""
        layout = _layout(generators)
        coefficients = {}
        for degree, named in terms.items():
            names = layout.get(degree, ())
            values = [Fraction(0)] * len(names)
            for name, value in named.items():
                if name not in names:
                    raise UnknownGeneratorError(name)
                values[names.index(name)] = Fraction(value)
            coefficients[degree] = values
        return cls(layout, coefficients)

    def _check_layout(self, other):
        if self.generators != other.generators:
            raise DimensionMismatchError(_("Classes have different generator layouts."))

    def coefficient(self, degree, name):
        names = self.generators.get(degree, ())
        if name not in names:
            raise UnknownGeneratorError(name)
        return self.coefficients[degree][names.index(name)]

    def component(self, degree):
        return dict(zip(self.generators.get(degree, ()), self.coefficients.get(degree, ())))

    def degree_of(self, name):
        for degree, names in self.generators.items():
            if name in names:
                return degree
        raise UnknownGeneratorError(name)

    def nonzero_degrees(self):
        return [d for d, values in self.coefficients.items() if any(values)]

    def is_zero(self):
        return not self.nonzero_degrees()

    def is_integral(self):
        return all(c.denominator == 1 for values in self.coefficients.values() for c in values)

    def concentrated_in(self, degree):
        return all(d == degree for d in self.nonzero_degrees())

    def with_generator(self, degree, name):
        """Return the same class over a layout extended by ``name`` in ``degree``."""
        generators = dict(self.generators)
        coefficients = dict(self.coefficients)
        if name in generators.get(degree, ()):
            return self
        generators[degree] = generators.get(degree, ()) + (name,)
        coefficients[degree] = coefficients.get(degree, ()) + (Fraction(0),)
        return GradedClass(generators, coefficients)

    def add_to(self, degree, name, value):
        """Return a copy with ``value`` added to one coefficient."""
        names = self.generators.get(degree, ())
        if name not in names:
            raise UnknownGeneratorError(name)
        coefficients = dict(self.coefficients)
        values = list(coefficients[degree])
        values[names.index(name)] += Fraction(value)
        coefficients[degree] = values
        return GradedClass(self.generators, coefficients)

    def __add__(self, other):
        self._check_layout(other)
        return GradedClass(
            self.generators,
            {
                d: [a + b for a, b in zip(self.coefficients[d], other.coefficients[d])]
                for d in self.generators
            },
        )

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return GradedClass(
            self.generators, {d: [c * scalar for c in v] for d, v in self.coefficients.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.generators == other.generators and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(tuple((d, self.generators[d], self.coefficients[d]) for d in self.generators))

    def to_json(self):
        return {
            f"deg{d}": {name: format_rational(c) for name, c in zip(self.generators[d], values)}
            for d, values in sorted(self.coefficients.items(), reverse=True)
        }

    def __str__(self):
        pieces = []
        for d in sorted(self.generators, reverse=True):
            for name, c in zip(self.generators[d], self.coefficients[d]):
                if not c:
                    continue
                sign = "-" if c < 0 else "+"
                magnitude = "" if abs(c) == 1 else format_rational(abs(c))
                pieces.append((sign, f"{magnitude}[{name}]"))
        if not pieces:
            return "0"
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        return text + "".join(f" {sign} {body}" for sign, body in pieces[1:])

    def __repr__(self):
        return f"GradedClass({self})"


class IntersectionTable:
    """
    Homology generators of an ``n``-dimensional space with its hyperplane action and pairing.

    ``hyperplane_action[2j]`` maps coefficients over the degree ``2j`` generators to coefficients
    over the degree ``2j - 2`` generators. ``pairing`` holds intersection numbers of generators in
    complementary degrees; missing pairs pair to zero.
    """

    def __init__(
        self, ambient_dim, generators, hyperplane_action=None, pairing=None, fundamental=None
    ):
        self.ambient_dim = ambient_dim
        self.generators = _layout(generators)
        top = 2 * ambient_dim
        for degree in range(0, top + 1, 2):
            self.generators.setdefault(degree, ())
        if set(self.generators) != set(range(0, top + 1, 2)):
            raise DimensionMismatchError(
                _("Generators must sit in even degrees 0..2n."), degrees=sorted(self.generators)
            )
        self.hyperplane_action = {}
        for degree in range(2, top + 1, 2):
            shape = (len(self.generators[degree - 2]), len(self.generators[degree]))
            matrix = (hyperplane_action or {}).get(degree)
            if matrix is None:
                matrix = RationalMatrix.zero(*shape)
            elif not isinstance(matrix, RationalMatrix):
                matrix = RationalMatrix(matrix, shape[1])
            if matrix.shape != shape:
                raise DimensionMismatchError(
                    _("Hyperplane action has the wrong shape."),
                    degree=degree,
                    expected=list(shape),
                    actual=list(matrix.shape),
                )
            self.hyperplane_action[degree] = matrix
        self.pairing = {}
        for (a, b), value in (pairing or {}).items():
            da, db = self.degree_of(a), self.degree_of(b)
            if da + db != top:
                raise DimensionMismatchError(
                    _("Pairing is only defined on complementary degrees."), left=a, right=b
                )
            self.pairing[(a, b)] = Fraction(value)
            self.pairing[(b, a)] = Fraction(value)
        top_names = self.generators[top]
        if fundamental is None:
            fundamental = {name: 1 for name in top_names}
        self._fundamental = GradedClass.from_terms(self.generators, {top: fundamental})

    def degree_of(self, name):
        for degree, names in self.generators.items():
            if name in names:
                return degree
        raise UnknownGeneratorError(name)

    def zero(self):
        return GradedClass(self.generators)

    def fundamental_class(self):
        return self._fundamental

    def class_from(self, terms):
        return GradedClass.from_terms(self.generators, terms)

    def pairing_value(self, a, b):
        self.degree_of(a)
        self.degree_of(b)
        return self.pairing.get((a, b), Fraction(0))

    def pairing_matrix(self, degree):
        """Rows: generators complementary to ``degree``; columns: generators in ``degree``."""
        complement = self.generators[2 * self.ambient_dim - degree]
        return RationalMatrix(
            [[self.pairing_value(h, g) for g in self.generators[degree]] for h in complement],
            len(self.generators[degree]),
        )

    def pair(self, cls, name):
        """Intersection number of a class with the generator ``name``."""
        degree = 2 * self.ambient_dim - self.degree_of(name)
        return sum(
            (c * self.pairing_value(g, name) for g, c in cls.component(degree).items()),
            Fraction(0),
        )

    def cap_hyperplane(self, cls, times=1):
        """Apply the hyperplane action ``times`` times; degree 0 parts drop out."""
        if cls.generators != self.generators:
            raise DimensionMismatchError(_("Class does not use this table's generators."))
        coefficients = dict(cls.coefficients)
        for _step in range(times):
            shifted = {0: (Fraction(0),) * len(self.generators[0])}
            for degree in range(2, 2 * self.ambient_dim + 1, 2):
                shifted[degree - 2] = self.hyperplane_action[degree].apply(coefficients[degree])
            top = 2 * self.ambient_dim
            shifted.setdefault(top, (Fraction(0),) * len(self.generators[top]))
            coefficients = shifted
        return GradedClass(self.generators, coefficients)


class BundleClassData:
    """
    Chern classes ``c_1..c_n`` of a rank ``k`` bundle, each a class in degree ``2(n - i)``.

    The line bundle enters through the hyperplane action of the table it is twisted on.
    """

    __slots__ = ("rank_k", "classes")

    def __init__(self, rank_k, classes):
        if rank_k < 1:
            raise DegenerateBundleError(rank=rank_k)
        self.rank_k = rank_k
        self.classes = tuple(classes)


def tensor_chern(B, n, T):
    """
    Return the total Chern class of ``E ⊗ L`` from the classes of ``E`` and the twist ``a``.

    The degree ``2(n - i)`` part is ``sum_j binom(k - i + j, j) a^j c_{i-j}`` with ``c_0 = [X]``.

    Raises:
        DimensionMismatchError: If the table or the class degrees are inconsistent.

    """
    if T.ambient_dim != n:
        raise DimensionMismatchError(_("Table dimension differs from n."), table=T.ambient_dim, n=n)
    if len(B.classes) > n:
        raise DimensionMismatchError(_("More Chern classes than dimensions."), count=len(B.classes))
    chern = [T.fundamental_class()] + list(B.classes)
    chern += [T.zero()] * (n + 1 - len(chern))
    for i, c in enumerate(chern):
        if not c.concentrated_in(2 * (n - i)):
            raise DimensionMismatchError(
                _("Chern class is not in its homological degree."), index=i, degree=2 * (n - i)
            )
    total = T.zero()
    for i in range(n + 1):
        for j, weight in enumerate(chern_tensor_coefficients(B.rank_k, i)):
            if weight:
                total = total + weight * T.cap_hyperplane(chern[i - j], times=j)
    return total


def mather_from_polar(chain_classes, n, T):
    """
    Return the lifted Chern–Mather class from the lifted polar classes.

    Args:
        chain_classes (list): ``[N^0], [N^1], ..., [N^n]`` over the table's generators, with
            ``[N^0]`` the fundamental class and empty polar varieties given as zero.
        n (int): Dimension of ``X``.
        T (IntersectionTable): The table of ``X``.

    Returns:
        GradedClass: The formula above with ``c_i = (-1)^i [N^i]`` and ``k = n + 1``.

    """
    if len(chain_classes) != n + 1:
        raise DimensionMismatchError(
            _("Expected one polar class per index 0..n."), expected=n + 1, actual=len(chain_classes)
        )
    if chain_classes[0] != T.fundamental_class():
        raise PreconditionError(_("The first polar class must be the fundamental class."))
    classes = [(-1) ** i * c for i, c in enumerate(chain_classes)][1:]
    result = tensor_chern(BundleClassData(n + 1, classes), n, T)
    log.debug("Mather class %s", result)
    return result


def csm_isolated(mather, points, summands=()):
    """
    Add the Euler obstruction correction ``(1 - Eu) [a]`` for isolated singular points.

    Args:
        mather (GradedClass): The Chern–Mather class.
        points (list): ``(generator_name, eu)`` pairs; names are degree 0 generators, or one of
            ``summands``.
        summands (tuple): Point names that get their own degree 0 generator appended.

    Raises:
        UnknownGeneratorError: For a name that is neither.

    """
    result = mather
    for name, eu in points:
        if name in summands:
            result = result.with_generator(0, name)
        elif name not in result.generators.get(0, ()):
            raise UnknownGeneratorError(name)
        result = result.add_to(0, name, 1 - Fraction(eu))
    return result
