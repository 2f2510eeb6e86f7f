from gettext import gettext as _

from matherlift.constants import EXAMPLE
from matherlift.app.management.base import ReportCommand, add_example_argument
from matherlift.app import catalog
from matherlift.app.tasks import curve_resolution


class Command(ReportCommand):
    """
    Compute Jacobian multiplicities of the singular points of a built-in plane curve.

    Each local branch is projected twice with seeded coefficients and both orders must agree.
    The report gives the Euler obstructions and compares the lifted first Chern class with the
    first Chern class of the normalization.
    """

    help = _(__doc__)

    def add_arguments(self, parser):
        add_example_argument(parser, default=EXAMPLE.CUSP)

    def report(self, cfg):
        return curve_resolution(catalog.get_example(cfg.example), cfg.seed, cfg.truncation)

    def rows(self, report):
        rows = [("hypersurface", report["hypersurface"])]
        for branch in report["branches"]:
            rows.append(
                (
                    f"n_W({branch['component']})",
                    f"{branch['n_W']} (point {branch['point']}, Eu {branch['eu']})",
                )
            )
        rows.append(("ĉ^1(X)", str(report["c1_hat"])))
        rows.append(("c^1(X~)", str(report["c1_resolution"])))
        return rows
