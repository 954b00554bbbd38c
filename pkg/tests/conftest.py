import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "orblab", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("orblab")

_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        terminalreporter.write_line(f"{name}: {'PASS' if outcome == 'passed' else 'FAIL'}")


@pytest.fixture
def unit1():
    from orblab.structure import unit1_seed

    return unit1_seed()


@pytest.fixture
def heis2():
    from orblab.structure import heisenberg_seed

    return heisenberg_seed(2)
