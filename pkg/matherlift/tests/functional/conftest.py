import json

from types import SimpleNamespace

import pytest

from matherlift.app.conf import settings
from matherlift.app.management import execute_from_command_line


@pytest.fixture
def run(capsys):
    """Run ``matherlift`` with the given arguments and capture the outcome."""

    def _run(*args):
        code = execute_from_command_line(["matherlift", *args])
        captured = capsys.readouterr()
        return SimpleNamespace(code=code, out=captured.out, err=captured.err)

    return _run


@pytest.fixture
def run_json(run):
    """Run a command that must succeed and return its parsed JSON report."""

    def _run_json(*args):
        result = run(*args)
        assert result.code == 0, result.err
        return json.loads(result.out)

    return _run_json


@pytest.fixture
def error_of():
    """Return the first error object of the JSON payload written to stderr after any log lines."""

    def _error_of(result):
        return json.loads(result.err[result.err.index("{\n") :])["errors"][0]

    return _error_of


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document to a temporary file and return its path."""

    def _write_json(name, document):
        path = tmp_path / name
        path.write_text(document if isinstance(document, str) else json.dumps(document))
        return str(path)

    return _write_json


@pytest.fixture
def env_settings(monkeypatch):
    """Set ``MATHERLIFT_*`` environment variables and reload the settings."""
    names = []

    def _env_settings(**values):
        for name, value in values.items():
            monkeypatch.setenv(f"MATHERLIFT_{name}", str(value))
            names.append(name)
        settings.reload()

    yield _env_settings
    for name in names:
        monkeypatch.delenv(f"MATHERLIFT_{name}", raising=False)
    settings.reload()
