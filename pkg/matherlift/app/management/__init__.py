"""Entry point of the ``matherlift`` console script."""
import sys

import django

from django.conf import settings as django_settings
from django.core.management import ManagementUtility

from matherlift.constants import EXIT_CODE

DJANGO_SETTINGS = {
    "INSTALLED_APPS": ["matherlift.app.MatherliftAppConfig"],
    "USE_TZ": True,
}


def setup():
    """Configure Django for the management commands; no database or site is involved."""
    if not django_settings.configured:
        django_settings.configure(**DJANGO_SETTINGS)
        django.setup()


def execute_from_command_line(argv=None):
    """
    Run the command named by ``argv[1]`` through Django's management utility.

    Returns:
        int: The process exit code.

    """
    setup()
    try:
        ManagementUtility(list(sys.argv if argv is None else argv)).execute()
    except SystemExit as error:
        return EXIT_CODE.SUCCESS if error.code is None else error.code
    return EXIT_CODE.SUCCESS


def main():
    sys.exit(execute_from_command_line())
