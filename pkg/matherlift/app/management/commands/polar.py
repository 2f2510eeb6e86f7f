from gettext import gettext as _

from matherlift.app.conf import settings
from matherlift.app.grassmann import Flag
from matherlift.app.management.base import (
    ReportCommand,
    add_example_argument,
    resolve_hypersurface,
)
from matherlift.app.polar import (
    certify_flag,
    certify_good_flag,
    check_chain_nesting,
    check_saturation_stable,
    flag_independence_check,
)
from matherlift.app.tasks.chern import example_lift
from matherlift.app.utils import load_json_file


class Command(ReportCommand):
    """
    Compute the polar varieties of a projective hypersurface.

    A flag is drawn from the seed and certified: every nonempty polar variety N^i must have
    codimension i. Pass --independence to repeat the computation for several seeds and check
    that the degrees (and, for built-in examples, the lifted classes) do not change.
    """

    help = _(__doc__)

    def add_arguments(self, parser):
        add_example_argument(parser)
        parser.add_argument(
            "--use-example-flag",
            action="store_true",
            help=_("Certify the flag shipped with the example instead of a seeded one."),
        )
        parser.add_argument(
            "--flag",
            dest="flag_path",
            metavar="PATH",
            help=_("Certify the flag whose basis rows are stored in this JSON file."),
        )
        parser.add_argument("--independence", action="store_true")

    def report(self, cfg):
        H, example = resolve_hypersurface(cfg)
        if cfg.options["flag_path"]:
            certificate = certify_flag(H, Flag.from_json(load_json_file(cfg.options["flag_path"])))
        elif cfg.options["use_example_flag"] and example is not None and example.flag_rows:
            certificate = certify_flag(H, example.flag())
        else:
            certificate = certify_good_flag(H, cfg.seed)
        chain = certificate.chain
        check_chain_nesting(chain)
        check_saturation_stable(chain)
        report = chain.to_json()
        report["checks"] = certificate.to_json()["checks"]
        if cfg.options["independence"]:
            seeds = [cfg.seed + 1000 * k for k in range(settings.FLAG_INDEPENDENCE_SEEDS)]
            lift = None
            if example is not None:

                def lift(other):
                    return example_lift(example, other)

            report["independence"] = flag_independence_check(H, seeds, lift).to_json()
        return report

    def rows(self, report):
        rows = [("hypersurface", report["hypersurface"]), ("flag seed", str(report["flag_seed"]))]
        for step in report["steps"]:
            rows.append(
                (
                    f"N^{step['i']}",
                    f"dim {step['dim']}, deg {step['deg']}: " + ", ".join(step["generators"]),
                )
            )
        if report["terminated_at"] is not None:
            rows.append((f"N^{report['terminated_at']}", _("empty")))
        if "independence" in report:
            rows.append((_("flag independent"), str(len(report["independence"]["profiles"]))))
        return rows
