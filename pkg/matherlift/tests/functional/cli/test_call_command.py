"""Tests for running the commands in-process through Django."""
import json

from io import StringIO

import pytest

from django.core.management import call_command

from matherlift.app.exceptions import InputInvalid
from matherlift.app.management import setup


@pytest.fixture(autouse=True)
def configured():
    setup()


def test_lift_report():
    """call_command returns the rendered report and writes it to stdout."""
    out = StringIO()
    output = call_command("lift", example="cusp", stdout=out)
    report = json.loads(out.getvalue())
    assert json.loads(output) == report
    assert [branch["n_W"] for branch in report["branches"]] == [1]


def test_table_option():
    """Options are passed by destination or option name."""
    out = StringIO()
    call_command("cone-ih", curve_degree=3, format="table", stdout=out)
    assert "rational_homology_manifold  False" in out.getvalue()


def test_errors_raise():
    """Package errors propagate to the caller."""
    with pytest.raises(InputInvalid):
        call_command("polar", stdout=StringIO())
