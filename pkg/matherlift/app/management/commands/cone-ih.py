from gettext import gettext as _

from matherlift.app.ihcone import (
    ConeInput,
    a1_link_betti,
    cone_ih_betti,
    is_rational_homology_manifold_cone,
    plane_curve_betti,
    plane_curve_cone_input,
    thom_homology,
)
from matherlift.app.management.base import ReportCommand
from matherlift.app.tasks.verdier import QUADRIC_BASE_BETTI
from matherlift.app.utils import cone_document


class Command(ReportCommand):
    """
    Compute intersection homology Betti numbers of a projective cone.

    The input names the Betti numbers of the smooth base and the rank of Poincaré duality in the
    middle degree; without --input the cone over P^1 x P^1 is used. With --curve-degree D the
    base is a smooth plane curve of degree D and the link of the cone point is reported too.
    """

    help = _(__doc__)

    def add_arguments(self, parser):
        parser.add_argument("--curve-degree", type=int, default=None)

    def report(self, cfg):
        degree = cfg.options["curve_degree"]
        report = {}
        if degree is not None:
            cone = plane_curve_cone_input(degree)
            curve = plane_curve_betti(degree)
            report["link"] = a1_link_betti(degree, curve[0], curve[1], curve[2])
            report["rational_homology_manifold"] = is_rational_homology_manifold_cone(degree)
        elif cfg.input_path:
            cone = ConeInput(*cone_document(cfg.load_input()))
        else:
            cone = ConeInput(QUADRIC_BASE_BETTI, 0)
        ih = cone_ih_betti(cone)
        homology = thom_homology(cone.base_betti)
        report.update(
            {
                "base_betti": cone.base_betti,
                "middle_pd_rank": cone.middle_pd_rank,
                "homology": homology,
                "ih_betti": ih,
                "ih_equals_homology": ih == homology,
                "symmetric": ih.is_symmetric,
            }
        )
        return report

    def rows(self, report):
        return [
            (key, ", ".join(str(b) for b in value) if hasattr(value, "betti") else str(value))
            for key, value in report.items()
        ]
