"""
Shared options and output of the ``matherlift`` management commands.

Every command subclasses ``ReportCommand``; ``report`` computes a JSON-able dict from the merged
run configuration and ``rows`` lays it out for ``--format table``.
"""
import argparse
import json
import logging
import logging.config
import sys

from dataclasses import dataclass, field
from gettext import gettext as _
from typing import Optional

from django.core.management import BaseCommand, CommandError

from matherlift.constants import OUTPUT_FORMAT
from matherlift.app import MatherliftAppConfig, catalog
from matherlift.app.conf import settings
from matherlift.app.exceptions import InputInvalid, MatherliftError
from matherlift.app.polar import Hypersurface
from matherlift.app.utils import dump_report, load_json_file, to_jsonable

log = logging.getLogger(__name__)

LOG_LEVELS = {0: "WARNING", 1: "INFO"}


@dataclass
class RunConfig:
    """Everything a command run depends on, after flags and environment are merged."""

    command: str
    input_path: Optional[str] = None
    seed: int = 0xC0FFEE
    output_format: str = OUTPUT_FORMAT.JSON
    truncation: int = 16
    verbosity: int = 0
    example: Optional[str] = None
    options: dict = field(default_factory=dict)

    def load_input(self):
        return load_json_file(self.input_path)


def configure_logging(verbosity):
    """Send diagnostics to stderr; each ``--verbose`` lowers the threshold one step."""
    level = LOG_LEVELS.get(verbosity, "DEBUG")
    logging.config.dictConfig(
        {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {"simple": {"format": "%(levelname)s %(name)s: %(message)s"}},
            "handlers": {
                "stderr": {
                    "class": "logging.StreamHandler",
                    "stream": "ext://sys.stderr",
                    "formatter": "simple",
                }
            },
            "loggers": {"matherlift": {"handlers": ["stderr"], "level": level}},
        }
    )


def _positive(value):
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(_("{} is not an integer").format(value))
    if number < 1:
        raise argparse.ArgumentTypeError(_("{} is not positive").format(value))
    return number


def _seed(value):
    try:
        return int(value, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(_("{} is not an integer seed").format(value))


class ReportCommand(BaseCommand):
    """
    A management command whose result is a report printed to stdout.

    Package errors are written to stderr as their JSON payload and end the process with the
    error's exit code; malformed options are input errors.
    """

    requires_system_checks = []
    usage = ""

    def get_version(self):
        return MatherliftAppConfig.version

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        # raise CommandError on bad options instead of exiting with status 2
        parser.called_from_command_line = False
        parser.add_argument("--input", dest="input_path", metavar="PATH")
        parser.add_argument("--seed", type=_seed, default=None)
        parser.add_argument(
            "--format",
            dest="output_format",
            choices=[OUTPUT_FORMAT.JSON, OUTPUT_FORMAT.TABLE],
            default=None,
        )
        parser.add_argument("--truncation", type=_positive, default=None)
        parser.add_argument("--verbose", action="count", default=0)
        self.usage = parser.format_usage()
        return parser

    def run_from_argv(self, argv):
        try:
            super().run_from_argv(argv)
        except CommandError as error:
            self.fail(
                InputInvalid(
                    _("Invalid command line."),
                    reason=str(error).replace("Error: ", "", 1),
                    usage=self.usage,
                )
            )
        except MatherliftError as error:
            self.fail(error)

    def fail(self, error):
        log.debug("%s failed: %s", type(self).__module__, error.message)
        self.stderr.write(json.dumps(error.detail, indent=2, default=to_jsonable))
        sys.exit(error.exit_code)

    def build_config(self, options):
        # Django's -v counts from 1
        verbosity = options.get("verbose", 0) + max(options.get("verbosity", 1) - 1, 0)
        seed = options.get("seed")
        return RunConfig(
            command=type(self).__module__.rsplit(".", 1)[-1],
            input_path=options.get("input_path"),
            seed=settings.SEED if seed is None else seed,
            output_format=options.get("output_format") or settings.OUTPUT_FORMAT,
            truncation=options.get("truncation") or settings.SERIES_TRUNCATION,
            verbosity=verbosity,
            example=options.get("example"),
            options=options,
        )

    def handle(self, *args, **options):
        cfg = self.build_config(options)
        configure_logging(cfg.verbosity)
        log.debug("Running %s with %s", cfg.command, cfg.input_path or cfg.example)
        return self.render(self.report(cfg), cfg)

    def report(self, cfg):
        raise NotImplementedError("subclasses of ReportCommand must provide a report() method")

    def rows(self, report):
        """Return ``(label, value)`` pairs for the table format."""
        return [(str(key), _cell(value)) for key, value in report.items()]

    def render(self, report, cfg):
        if cfg.output_format == OUTPUT_FORMAT.TABLE:
            rows = self.rows(report)
            width = max((len(label) for label, _value in rows), default=0)
            return "\n".join(f"{label:<{width}}  {value}" for label, value in rows)
        return dump_report(report)


def _cell(value):
    if isinstance(value, (list, tuple)):
        return ", ".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return "; ".join(f"{k}: {_cell(v)}" for k, v in value.items())
    return str(value)


def add_example_argument(parser, default=None):
    parser.add_argument(
        "--example",
        choices=sorted(catalog.BUILTIN_EXAMPLES),
        default=default,
        help=_("Use an embedded input instead of --input."),
    )


def resolve_hypersurface(cfg):
    """
    Return the hypersurface of a run and the built-in example it belongs to, if any.

    A file passed with ``--input`` is matched to a built-in example by name and polynomial.

    Raises:
        InputInvalid: If neither ``--input`` nor ``--example`` is given.

    """
    if cfg.input_path:
        H = Hypersurface.from_json(cfg.load_input())
        example = catalog.BUILTIN_EXAMPLES.get(H.name)
        if example is not None and example.hypersurface().f != H.f:
            example = None
        return H, example
    if cfg.example:
        example = catalog.get_example(cfg.example)
        return example.hypersurface(), example
    raise InputInvalid(_("Pass a hypersurface with --input or name one with --example."))
