from __future__ import annotations

import sys

import pytest
from hypothesis import HealthCheck, settings

from wittingrays.registry import load

settings.register_profile(
    "thorough",
    max_examples=1000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("thorough")


@pytest.fixture(scope="session")
def penrose():
    return load("penrose-canonical")


@pytest.fixture(scope="session")
def penrose_float():
    return load("penrose-eq3")


@pytest.fixture(scope="session")
def e8():
    return load("e8")


@pytest.fixture(scope="session")
def f148():
    return load("f148")


@pytest.fixture(scope="session")
def subsystems():
    return [load(f"f148-sub-{i}") for i in range(1, 9)]


def pytest_terminal_summary(terminalreporter):
    # one line per acceptance criterion, collected by test_acceptance
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", [])
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
