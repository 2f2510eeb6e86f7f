from gettext import gettext as _

from matherlift.constants import EXAMPLE
from matherlift.app import catalog
from matherlift.app.exceptions import InputInvalid
from matherlift.app.management.base import (
    ReportCommand,
    add_example_argument,
    resolve_hypersurface,
)
from matherlift.app.tasks import chern_classes


class Command(ReportCommand):
    """
    Compute the lifted Chern-Mather and Chern-Schwartz-MacPherson classes of a built-in example.

    Homology tables are only known for the embedded examples, so an --input file must carry
    the name and polynomial of one of them.
    """

    help = _(__doc__)

    def add_arguments(self, parser):
        add_example_argument(parser, default=EXAMPLE.QUADRIC_CONE)

    def report(self, cfg):
        H, example = resolve_hypersurface(cfg)
        if example is None:
            raise InputInvalid(
                _("No homology table is known for this hypersurface."),
                hypersurface=H.name,
                known=sorted(catalog.BUILTIN_EXAMPLES),
            )
        return chern_classes(example, cfg.seed, cfg.truncation)

    def rows(self, report):
        rows = [("hypersurface", report["hypersurface"])]
        for i, cls in enumerate(report["lifted"]):
            rows.append((f"[N^{i}]", str(cls)))
        rows.append(("c_M(X)", str(report["mather"])))
        rows.append(("c_SM(X)", str(report["csm"])))
        for point, eu in report["euler_obstructions"].items():
            rows.append((f"Eu({point})", str(eu)))
        rows.append(("χ(X)", str(report["euler_characteristic"])))
        return rows
