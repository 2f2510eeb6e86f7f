from gettext import gettext as _

from matherlift.app.management.base import ReportCommand
from matherlift.app.tasks import run_schubert_suite

COUNTS_ROW = _(
    "{samples} samples, nesting {nesting}, regular part {regular_part}, top empty {top_empty}"
)


class Command(ReportCommand):
    """
    Check the Schubert cell properties of the polar construction on seeded samples.

    For G(2,4) and G(2,5) random flags and planes are drawn and the cells M^i are checked to be
    nested, to meet correctly along their regular parts and to end with an empty M^(n+1). A
    plane in the open cells at i and i+1 is then built for every i < n.
    """

    help = _(__doc__)

    def add_arguments(self, parser):
        parser.add_argument("--samples", type=int, default=None)

    def report(self, cfg):
        return run_schubert_suite(cfg.seed, cfg.options["samples"])

    def rows(self, report):
        rows = [("seed", str(report["seed"]))]
        for space, data in report["spaces"].items():
            counts = data["counts"]
            rows.append(
                (
                    space,
                    COUNTS_ROW.format(**counts),
                )
            )
            for witness in data["witnesses"]:
                rows.append((f"{space} witness i={witness['i']}", str(witness["strata"])))
        return rows
