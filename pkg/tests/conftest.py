from __future__ import annotations

import re

import pytest

from mononorm.fixtures import FIXTURES, export_fixture
from mononorm.monomials import parse_ideal

IDEAL_FIXTURES = [name for name in FIXTURES if name != "hb-L5"]


def load(name: str):
    return parse_ideal(export_fixture(name))


@pytest.fixture(scope="session")
def fixture_ideals():
    return {name: load(name) for name in IDEAL_FIXTURES}


# one summary line per acceptance criterion

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_acceptance: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        key = m.group(1)
        _acceptance[key] = ("PASS" if report.passed else "FAIL", m.group(2).replace("_", " "))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_acceptance, key=int):
        status, name = _acceptance[key]
        terminalreporter.write_line(f"criterion {int(key):2d}: {status}  {name}")
