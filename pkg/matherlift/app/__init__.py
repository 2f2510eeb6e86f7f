from django.apps import AppConfig


class MatherliftAppConfig(AppConfig):
    """Entry point for the matherlift management commands."""

    name = "matherlift.app"
    label = "matherlift"
    version = "0.1.0.dev"
    python_package_name = "matherlift"
