"""
Complete flags, Grassmannian points and the Schubert-type cells of the polar construction.

For an n-plane ``W`` in ``k^m`` and a complete flag ``F``, ``W`` lies in ``M^i`` when
``W + V_{m-n+i-1}`` is a proper subspace, and in the stratum ``M^{i,k}`` when that sum has
codimension ``k + 1``.
"""
import logging

from gettext import gettext as _

from matherlift.app.conf import settings
from matherlift.app.exceptions import (
    DegenerateInputError,
    DimensionMismatchError,
    PreconditionError,
    PropertyViolation,
)
from matherlift.app.exactmath.linalg import RationalMatrix, matrix_rank
from matherlift.app.utils import SeededSource, matrix_rows_from_json, matrix_rows_to_json

log = logging.getLogger(__name__)


class Flag:
    """
    A complete flag ``0 = V_0 ⊂ V_1 ⊂ ... ⊂ V_m = k^m``.

    The flag is stored as an invertible basis matrix; stage ``V_j`` is the span of its first ``j``
    rows, so the nesting and the stage dimensions hold by construction.
    """

    __slots__ = ("m", "basis")

    def __init__(self, basis):
        basis = basis if isinstance(basis, RationalMatrix) else RationalMatrix(basis)
        if basis.nrows != basis.ncols:
            raise DimensionMismatchError(_("Flag basis must be square."), shape=list(basis.shape))
        if matrix_rank(basis) != basis.nrows:
            raise PreconditionError(_("Flag basis rows must be independent."))
        self.m = basis.nrows
        self.basis = basis

    @classmethod
    def from_rows(cls, rows):
        return cls(RationalMatrix(rows))

    @classmethod
    def from_json(cls, data):
        return cls.from_rows(matrix_rows_from_json(data))

    def stage(self, j):
        """Return a spanning matrix of ``V_j`` (``0 <= j <= m``)."""
        if not 0 <= j <= self.m:
            raise PreconditionError(_("Flag stage out of range."), stage=j, m=self.m)
        return self.basis.head(j)

    @property
    def stages(self):
        return [self.stage(j) for j in range(self.m + 1)]

    def __eq__(self, other):
        if not isinstance(other, Flag):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def to_json(self):
        return matrix_rows_to_json(self.basis)


class GrassmannPoint:
    """An ``n``-dimensional subspace of ``k^m`` given by a basis of rows."""

    __slots__ = ("n", "m", "basis")

    def __init__(self, basis):
        basis = basis if isinstance(basis, RationalMatrix) else RationalMatrix(basis)
        if matrix_rank(basis) != basis.nrows:
            raise PreconditionError(_("Subspace basis rows must be independent."))
        self.n = basis.nrows
        self.m = basis.ncols
        self.basis = basis


def standard_flag(m):
    """The flag spanned by the coordinate vectors ``e_1, ..., e_m`` in order."""
    return Flag(RationalMatrix.identity(m))


def random_flag(m, seed=None):
    """
    Draw a complete flag from seeded rational vectors.

    Raises:
        DegenerateInputError: If no invertible basis is drawn within the attempt limit.

    """
    source = SeededSource(seed)
    for attempt in range(settings.MAX_GENERICITY_ATTEMPTS):
        basis = RationalMatrix([source.vector(m) for _i in range(m)], m)
        if matrix_rank(basis) == m:
            return Flag(basis)
        log.warning(_("Seeded flag basis was singular on attempt {}").format(attempt + 1))
    raise DegenerateInputError(m=m, seed=source.seed)


def random_grassmann_point(n, m, source):
    for _attempt in range(settings.MAX_GENERICITY_ATTEMPTS):
        basis = RationalMatrix([source.vector(m) for _i in range(n)], m)
        if matrix_rank(basis) == n:
            return GrassmannPoint(basis)
    raise DegenerateInputError(n=n, m=m)


def _check_pair(W, F):
    if W.m != F.m:
        raise DimensionMismatchError(_("Subspace and flag live in different spaces."), w=W.m, f=F.m)
    if not 0 <= W.n <= W.m:
        raise PreconditionError(_("Subspace dimension out of range."), n=W.n, m=W.m)


def schubert_defect(W, F, i):
    """
    Return the Schubert defect of ``W`` against ``F`` at index ``i``.

    This is ``codim(W + V_{m-n+i-1}) - 1``: the stratum index ``k`` of ``W`` in ``M^i``, or ``-1``
    when the sum fills the ambient space and ``W`` is not in ``M^i``.
    """
    _check_pair(W, F)
    n, m = W.n, W.m
    if not 0 <= i <= n + 1:
        raise PreconditionError(_("Schubert index out of range."), i=i, n=n)
    stage = F.stage(max(m - n + i - 1, 0))
    return m - matrix_rank(W.basis.stack(stage)) - 1


def stratum_classify(W, F):
    """
    Return ``(i, k)`` for every ``i`` in ``0..n+1`` with ``W`` in the stratum ``M^{i,k}``.

    Raises:
        PropertyViolation: If membership is not monotone in ``i``.

    """
    strata = []
    for i in range(W.n + 2):
        defect = schubert_defect(W, F, i)
        if defect >= 0:
            strata.append((i, defect))
    indices = [i for i, _k in strata]
    if indices != list(range(len(indices))):
        raise PropertyViolation(_("Schubert varieties are not nested."), strata=strata)
    return strata


def prop13_witness(F, i, n, seed=None):
    """
    Build an ``n``-plane lying in the open cell at index ``i`` and in the closed cell at ``i+1``.

    The plane is spanned by the flag vector ``α`` of ``V_{m-n+i} \\ V_{m-n+i-1}``, by ``i`` random
    combinations of ``V_{m-n+i-1}`` and by ``n-1-i`` random vectors.

    Raises:
        PreconditionError: Unless ``0 <= i < n < m``.
        DegenerateInputError: If no witness is found within the attempt limit.

    """
    m = F.m
    if not 0 <= i < n < m:
        raise PreconditionError(_("Witness needs 0 <= i < n < m."), i=i, n=n, m=m)
    source = SeededSource(seed)
    index = m - n + i - 1
    below = F.stage(max(index, 0))
    for attempt in range(settings.MAX_GENERICITY_ATTEMPTS):
        rows = [F.basis.row(index)]
        for _j in range(i):
            weights = source.vector(below.nrows)
            rows.append(
                tuple(sum(w * row[k] for w, row in zip(weights, below.rows)) for k in range(m))
            )
        for _j in range(n - 1 - i):
            rows.append(source.vector(m))
        candidate = RationalMatrix(rows, m)
        if matrix_rank(candidate) != n:
            continue
        W = GrassmannPoint(candidate)
        if schubert_defect(W, F, i) == 0 and schubert_defect(W, F, i + 1) == 0:
            return W
        log.debug("Witness attempt %d was not in the expected cells", attempt + 1)
    raise DegenerateInputError(i=i, n=n, m=m)
