"""Rational Betti numbers of projective cones and their middle-perversity intersection homology."""
import logging
from gettext import gettext as _

from matherlift.app.exceptions import DegenerateBundleError, PreconditionError

log = logging.getLogger(__name__)


class GradedBetti:
    """Betti numbers indexed by homological degree."""

    __slots__ = ("betti",)

    def __init__(self, betti):
        betti = tuple(int(b) for b in betti)
        if any(b < 0 for b in betti):
            raise PreconditionError(_("Betti numbers must be nonnegative."), betti=list(betti))
        self.betti = betti

    def __getitem__(self, degree):
        return self.betti[degree] if 0 <= degree < len(self.betti) else 0

    def __len__(self):
        return len(self.betti)

    def __iter__(self):
        return iter(self.betti)

    def __eq__(self, other):
        if isinstance(other, GradedBetti):
            return self.betti == other.betti
        if isinstance(other, (tuple, list)):
            return self.betti == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.betti)

    def __repr__(self):
        return f"GradedBetti({list(self.betti)})"

    @property
    def euler_characteristic(self):
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    @property
    def is_symmetric(self):
        return self.betti == tuple(reversed(self.betti))

    def to_json(self):
        return list(self.betti)


class ConeInput:
    """The smooth base ``B`` of a projective cone and the rank of Poincaré duality in the middle."""

    __slots__ = ("base_betti", "middle_pd_rank")

    def __init__(self, base_betti, middle_pd_rank):
        base = base_betti if isinstance(base_betti, GradedBetti) else GradedBetti(base_betti)
        if len(base) % 2 != 1:
            raise PreconditionError(
                _("Base Betti numbers must run over degrees 0..2(n-1)."), betti=list(base)
            )
        if not base.is_symmetric:
            raise PreconditionError(
                _("Base Betti numbers violate Poincaré duality."), betti=list(base)
            )
        if middle_pd_rank < 0:
            raise PreconditionError(_("Rank must be nonnegative."), rank=middle_pd_rank)
        self.base_betti = base
        self.middle_pd_rank = middle_pd_rank

    @property
    def base_dim_real(self):
        return len(self.base_betti) - 1


def thom_homology(base):
    """
    Return the Betti numbers of the Thom space of a line bundle over ``base``.

    The reduced homology is the base homology shifted up by 2; degree 0 carries the extra class.
    """
    return GradedBetti((1, 0) + tuple(base))


def cone_ih_betti(c):
    """
    Return the intersection homology Betti numbers of the projective cone over ``c.base_betti``.

    Below the complex dimension ``n`` they are the cohomological Betti numbers ``b_{2n-k}``,
    above it the homological ones, and in degree ``n`` the rank of the duality map.
    """
    homology = thom_homology(c.base_betti)
    n = len(homology) // 2
    betti = []
    for k in range(2 * n + 1):
        if k < n:
            betti.append(homology[2 * n - k])
        elif k == n:
            betti.append(c.middle_pd_rank)
        else:
            betti.append(homology[k])
    if homology[n] and n % 2:
        log.info(_("Odd middle homology is read off as the literal duality rank"))
    return GradedBetti(betti)


def plane_curve_betti(d):
    """Betti numbers ``(1, 2g, 1)`` of a smooth plane curve of degree ``d``."""
    if d < 1:
        raise PreconditionError(_("Degree must be positive."), degree=d)
    return GradedBetti((1, (d - 1) * (d - 2), 1))


def a1_link_betti(deg_d, base_b0, base_b1, base_b2):
    """
    Return the Betti numbers of the circle bundle ``L`` of degree ``deg_d`` over a smooth curve.

    By the Gysin sequence ``H^1(L) = H^1(K) ⊕ ker(d: H^0(K) -> H^2(K))``; ``H^2(L)`` is dual to
    ``H^1(L)`` on the closed 3-manifold ``L``.

    Raises:
        DegenerateBundleError: For ``deg_d = 0``.

    """
    if deg_d == 0:
        raise DegenerateBundleError(_("A degree zero bundle has no Gysin connecting map."))
    if deg_d < 0:
        raise PreconditionError(_("Degree must be positive."), degree=deg_d)
    kernel = base_b0 - min(base_b0, base_b2)
    first = base_b1 + kernel
    return GradedBetti((1, first, first, 1))


def is_rational_homology_manifold_cone(d):
    """Return True if the affine cone over a smooth plane curve of degree ``d`` is one."""
    curve = plane_curve_betti(d)
    link = a1_link_betti(d, curve[0], curve[1], curve[2])
    return link[1] == 0 and link[2] == 0


# A_d is the affine cone over a smooth plane curve of degree d
is_rational_homology_manifold_A_d = is_rational_homology_manifold_cone


def plane_curve_cone_input(d):
    """
    Return the cone input for the projective cone over a smooth plane curve of degree ``d``.

    The hyperplane class caps to a nonzero class, so the middle duality map has rank 1.
    """
    return ConeInput(plane_curve_betti(d), 1)
