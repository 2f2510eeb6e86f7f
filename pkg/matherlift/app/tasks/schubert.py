import logging

from gettext import gettext as _

from matherlift.app.conf import settings
from matherlift.app.exceptions import DegenerateInputError, PropertyViolation
from matherlift.app.exactmath.linalg import RationalMatrix, matrix_rank
from matherlift.app.grassmann import (
    GrassmannPoint,
    prop13_witness,
    random_flag,
    random_grassmann_point,
    schubert_defect,
    stratum_classify,
)
from matherlift.app.utils import SeededSource

log = logging.getLogger(__name__)


def _special_point(n, flag, source):
    """
    Draw an ``n``-plane meeting a random flag stage in at least ``k`` dimensions.

    Random planes only ever land in the open cell at index 0, so half of the samples are taken
    from these to reach the deeper cells.
    """
    m = flag.m
    stage = flag.stage(source.integer(1, m - 1))
    k = source.integer(1, min(n, stage.nrows))
    rows = []
    for _j in range(k):
        weights = source.vector(stage.nrows)
        rows.append(
            tuple(sum(w * row[c] for w, row in zip(weights, stage.rows)) for c in range(m))
        )
    rows.extend(source.vector(m) for _j in range(n - k))
    basis = RationalMatrix(rows, m)
    if matrix_rank(basis) != n:
        return random_grassmann_point(n, m, source)
    return GrassmannPoint(basis)


def _violation(space, prop, W, flag, i, defects):
    log.error(_("Schubert property {} failed in {} at index {}").format(prop, space, i))
    raise PropertyViolation(
        _("Schubert cell property does not hold."),
        space=space,
        property=prop,
        index=i,
        defects=defects,
        subspace=[[str(x) for x in row] for row in W.basis.rows],
        flag=flag.to_json(),
    )


def check_sample(space, W, flag, i):
    """
    Check the cell properties of one ``(W, flag, i)`` triple.

    Returns:
        set: The properties whose hypothesis applied to this sample.

    Raises:
        PropertyViolation: If one of them does not hold.

    """
    n, m = W.n, W.m
    here = schubert_defect(W, flag, i)
    above = schubert_defect(W, flag, i + 1)
    defects = {"i": here, "i+1": above}
    applied = {"nesting", "top_empty"}
    if above >= 0 and here < 0:
        _violation(space, "nesting", W, flag, i, defects)
    if above >= 0 and here == 0:
        applied.add("regular_part")
        if above != 0:
            _violation(space, "regular_part", W, flag, i, defects)
    if m - n - 1 >= 0 and schubert_defect(W, flag, 0) < 0:
        _violation(space, "first_cell_full", W, flag, 0, defects)
    if schubert_defect(W, flag, n + 1) != -1:
        _violation(space, "top_empty", W, flag, n + 1, defects)
    stratum_classify(W, flag)
    return applied


def run_schubert_suite(seed=None, samples=None, spaces=None):
    """
    Check the Schubert cell properties on seeded samples and build the cell witnesses.

    Args:
        seed (int): Seed of the sample stream; the configured seed by default.
        samples (int): Samples per Grassmannian.
        spaces (list): ``[n, m]`` pairs naming the Grassmannians ``G(n, m)``.

    Returns:
        dict: Per Grassmannian, how often each property was checked and the witness strata.

    Raises:
        PropertyViolation: On the first failing sample.

    """
    source = SeededSource(seed)
    samples = settings.SCHUBERT_SAMPLES if samples is None else samples
    spaces = settings.SCHUBERT_SPACES if spaces is None else spaces
    report = {"seed": source.seed, "spaces": {}}
    for index, (n, m) in enumerate(spaces):
        space = f"G({n},{m})"
        stream = source.spawn(index)
        counts = {"samples": 0, "nesting": 0, "regular_part": 0, "top_empty": 0}
        strata = {}
        for sample in range(samples):
            flag = random_flag(m, stream.next_u64())
            if sample % 2:
                W = _special_point(n, flag, stream)
            else:
                W = random_grassmann_point(n, m, stream)
            i = stream.integer(0, n)
            for prop in check_sample(space, W, flag, i):
                counts[prop] += 1
            counts["samples"] += 1
            key = str(len(stratum_classify(W, flag)))
            strata[key] = strata.get(key, 0) + 1
        witnesses = []
        flag = random_flag(m, stream.next_u64())
        for i in range(n):
            try:
                W = prop13_witness(flag, i, n, seed=stream.next_u64())
            except DegenerateInputError:
                raise PropertyViolation(
                    _("No plane found in the open cell of the next index."), space=space, index=i
                )
            witnesses.append({"i": i, "strata": [list(s) for s in stratum_classify(W, flag)]})
        log.info(_("Schubert properties hold on {} samples in {}").format(samples, space))
        report["spaces"][space] = {
            "counts": counts,
            "cells_reached": strata,
            "witnesses": witnesses,
        }
    return report
