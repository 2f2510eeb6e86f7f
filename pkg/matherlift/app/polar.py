"""
Polar varieties of cones over projective hypersurfaces.

For ``X = V(f)`` the Gauss map sends a smooth point to the hyperplane ``grad f``, so the Schubert
condition defining ``N^i`` becomes ``<grad f, v> = 0`` for the vectors ``v`` spanning the flag
stage ``V_i``. The closure of the smooth part is taken by saturating against the singular locus
ideal ``(f, ∂f/∂z_0, ..., ∂f/∂z_m)``.
"""
import logging

from gettext import gettext as _
from typing import NamedTuple, Optional, Tuple

from matherlift.app.conf import settings
from matherlift.app.exceptions import (
    BadFlagError,
    DegenerateInputError,
    DimensionMismatchError,
    HomogeneityError,
    PreconditionError,
    PropertyViolation,
)
from matherlift.app.exactmath import (
    Ideal,
    gradient,
    groebner,
    hilbert_dim_degree,
    ideal_contains,
    ideal_saturate,
    ideals_equal,
    linear_combination,
)
from matherlift.app.grassmann import Flag, random_flag
from matherlift.app.utils import (
    SeededSource,
    hypersurface_document,
    ideal_to_json,
    polynomial_to_json,
)

log = logging.getLogger(__name__)


class Hypersurface:
    """A projective hypersurface ``V(f)`` in ``P^m``, ``m + 1`` being the number of variables."""

    __slots__ = ("f", "name", "_singular_locus")

    def __init__(self, f, name=None):
        if not f:
            raise PreconditionError(_("The defining polynomial must be nonzero."))
        if not f.is_homogeneous:
            raise HomogeneityError(polynomial=str(f))
        if f.is_constant or len(f.variables) < 3:
            raise PreconditionError(
                _("A hypersurface needs a positive-degree form in at least 3 variables."),
                variables=list(f.variables),
            )
        self.f = f
        self.name = name or str(f)
        self._singular_locus = None

    @classmethod
    def from_json(cls, data):
        name, f = hypersurface_document(data)
        return cls(f, name=name)

    @property
    def ambient_vars(self):
        return self.f.variables

    @property
    def m(self):
        return len(self.f.variables) - 1

    @property
    def n(self):
        return len(self.f.variables) - 2

    @property
    def ideal(self):
        return Ideal(self.ambient_vars, [self.f])

    @property
    def singular_locus(self):
        if self._singular_locus is None:
            self._singular_locus = Ideal(self.ambient_vars, (self.f,) + gradient(self.f))
        return self._singular_locus

    def to_json(self):
        return {"name": self.name, "f": polynomial_to_json(self.f)}


class PolarStep(NamedTuple):
    """One nonempty polar variety ``N^i`` with its projective dimension and degree."""

    i: int
    ideal: Ideal
    proj_dimension: int
    degree: int

    def to_json(self):
        return {
            "i": self.i,
            "dim": self.proj_dimension,
            "deg": self.degree,
            "generators": [str(g) for g in self.ideal.generators],
            "ideal": ideal_to_json(self.ideal),
        }


class PolarChain(NamedTuple):
    """
    The nonempty polar varieties ``X = N^0 ⊃ N^1 ⊃ ...`` of a hypersurface for one flag.

    ``terminated_at`` is the first index whose polar variety is empty, or ``None`` when every
    ``N^i`` up to ``i = n`` is nonempty.
    """

    hypersurface: Hypersurface
    flag: Flag
    steps: Tuple[PolarStep, ...]
    terminated_at: Optional[int]
    flag_seed: Optional[int] = None

    def step(self, i):
        """Return ``N^i`` or ``None`` when it is empty."""
        return self.steps[i] if i < len(self.steps) else None

    def profile(self):
        return tuple((s.proj_dimension, s.degree) for s in self.steps)

    def to_json(self):
        return {
            "hypersurface": self.hypersurface.name,
            "steps": [s.to_json() for s in self.steps],
            "terminated_at": self.terminated_at,
            "flag_seed": self.flag_seed,
            "flag": self.flag.to_json(),
        }


class GoodFlagCertificate(NamedTuple):
    """A flag whose polar varieties all have the expected codimension, with the evidence."""

    flag: Flag
    seed: Optional[int]
    checks: Tuple[Tuple[int, int, int], ...]
    chain: PolarChain

    def to_json(self):
        return {
            "seed": self.seed,
            "flag": self.flag.to_json(),
            "checks": [
                {"i": i, "expected_codim": expected, "achieved_codim": achieved}
                for i, expected, achieved in self.checks
            ],
        }


def _check_flag(H, F):
    if F.m != H.m + 1:
        raise DimensionMismatchError(
            _("Flag must live on the cone ambient of dimension m + 1."), flag=F.m, cone=H.m + 1
        )


def polar_forms(H, F, i):
    """Return ``<grad f, v>`` for the first ``i`` flag vectors ``v``."""
    partials = gradient(H.f)
    return [linear_combination(v, partials) for v in F.stage(i).rows]


def polar_ideal(H, F, i):
    """
    Return the saturated ideal of the projectivized polar variety ``N^i``.

    Args:
        H (Hypersurface): The hypersurface ``X``.
        F (Flag): A complete flag on ``k^{m+1}``.
        i (int): The polar index, ``1 <= i <= n + 1``.

    Returns:
        Ideal: The unit ideal encodes the empty variety.

    """
    _check_flag(H, F)
    if not 1 <= i <= H.n + 1:
        raise PreconditionError(_("Polar index out of range."), i=i, n=H.n)
    naive = Ideal(H.ambient_vars, [H.f] + polar_forms(H, F, i))
    return ideal_saturate(naive, H.singular_locus)


def _step(i, ideal):
    data = hilbert_dim_degree(groebner(ideal))
    return PolarStep(i, ideal, data.projective_dimension, data.degree)


def polar_chain(H, F, flag_seed=None):
    """
    Compute the polar chain of ``H`` for ``F``, stopping at the first empty step.

    Raises:
        BadFlagError: If some nonempty ``N^i`` does not have codimension ``i`` in ``X``.

    """
    _check_flag(H, F)
    top = _step(0, H.ideal)
    steps = [top]
    terminated_at = None
    for i in range(1, H.n + 1):
        step = _step(i, polar_ideal(H, F, i))
        log.debug("N^%d of %s: dimension %d, degree %d", i, H.name, *step[2:])
        if step.proj_dimension < 0:
            terminated_at = i
            break
        achieved = top.proj_dimension - step.proj_dimension
        if achieved != i:
            raise BadFlagError(step=i, expected=i, achieved=achieved)
        steps.append(step)
    return PolarChain(H, F, tuple(steps), terminated_at, flag_seed)


def certify_flag(H, F, seed=None):
    """Certify an explicit flag, returning the checks and the computed chain."""
    chain = polar_chain(H, F, flag_seed=seed)
    top = chain.steps[0].proj_dimension
    checks = tuple((s.i, s.i, top - s.proj_dimension) for s in chain.steps[1:])
    return GoodFlagCertificate(F, seed, checks, chain)


def certify_good_flag(H, seed=None):
    """
    Draw seeded flags until one passes the codimension checks.

    Raises:
        DegenerateInputError: If every attempt within the attempt limit gives a bad flag.

    """
    base = settings.SEED if seed is None else int(seed)
    source = SeededSource(base)
    for attempt in range(settings.MAX_GENERICITY_ATTEMPTS):
        # retry seeds are spawned, disjoint from neighbouring base seeds
        flag_seed = source.spawn(attempt).seed if attempt else base
        flag = random_flag(H.m + 1, flag_seed)
        try:
            return certify_flag(H, flag, seed=flag_seed)
        except BadFlagError as error:
            log.warning(
                _("Flag from seed {} is not good for {} (step {}); retrying").format(
                    flag_seed, H.name, error.step
                )
            )
    raise DegenerateInputError(hypersurface=H.name, seed=base)


def check_chain_nesting(chain):
    """
    Check that the ideal of ``N^i`` is contained in the ideal of ``N^{i+1}``.

    Raises:
        PropertyViolation: On the first step that is not nested.

    """
    for outer, inner in zip(chain.steps, chain.steps[1:]):
        if not ideal_contains(inner.ideal, outer.ideal):
            raise PropertyViolation(_("Polar varieties are not nested."), step=inner.i)


def check_saturation_stable(chain):
    """
    Check that saturating each polar ideal a second time changes nothing.

    Raises:
        PropertyViolation: On the first step that moves.

    """
    singular = chain.hypersurface.singular_locus
    for step in chain.steps[1:]:
        if not ideals_equal(ideal_saturate(step.ideal, singular), step.ideal):
            raise PropertyViolation(_("Polar ideal is not saturated."), step=step.i)


class FlagIndependenceReport(NamedTuple):
    profiles: dict
    lifted: dict

    def to_json(self):
        return {
            "profiles": {
                str(seed): [list(p) for p in profile] for seed, profile in self.profiles.items()
            },
            "lifted": {
                str(seed): [c.to_json() for c in classes] for seed, classes in self.lifted.items()
            },
        }


def flag_independence_check(H, seeds, lift=None):
    """
    Check that the polar profile does not depend on the certified flag.

    Args:
        H (Hypersurface): The hypersurface.
        seeds (list): At least two flag seeds.
        lift (callable): Optional map from a chain to its lifted classes; when given the lifted
            classes must agree too.

    Raises:
        PreconditionError: With fewer than two seeds.
        PropertyViolation: Listing both profiles (or class lists) that disagree.

    """
    seeds = list(seeds)
    if len(seeds) < 2:
        raise PreconditionError(_("Flag independence needs at least two seeds."), seeds=seeds)
    profiles = {}
    lifted = {}
    for seed in seeds:
        chain = certify_good_flag(H, seed).chain
        profiles[seed] = chain.profile()
        if lift is not None:
            lifted[seed] = list(lift(chain))
    first = seeds[0]
    for seed in seeds[1:]:
        if profiles[seed] != profiles[first]:
            raise PropertyViolation(
                _("Polar profiles depend on the flag."),
                seeds=[first, seed],
                profiles=[profiles[first], profiles[seed]],
            )
        if lift is not None and lifted[seed] != lifted[first]:
            raise PropertyViolation(
                _("Lifted polar classes depend on the flag."),
                seeds=[first, seed],
                classes=[[str(c) for c in lifted[first]], [str(c) for c in lifted[seed]]],
            )
    return FlagIndependenceReport(profiles, lifted)
