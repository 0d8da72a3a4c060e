"""Shared fixtures: the session-wide distribution table (solved once) and a
summary hook that prints one line per acceptance criterion at the end."""

from __future__ import annotations

import pytest

_ACCEPTANCE_OUTCOMES: dict[int, str] = {}


@pytest.fixture(scope="session")
def painleve_solution():
    from lislab import tracywidom

    return tracywidom.solve_painleve_ii()


@pytest.fixture(scope="session")
def tw_table(painleve_solution):
    from lislab import tracywidom

    return tracywidom.tw_cdf_table(painleve_solution)


@pytest.fixture
def run_cli(capsys):
    """In-process CLI runner returning (exit_code, stdout, stderr)."""
    from lislab import cli

    def run(*argv: str):
        code = cli.main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    number = int(report.nodeid.rsplit("test_criterion_", 1)[1][:2])
    if report.when == "call":
        _ACCEPTANCE_OUTCOMES[number] = "PASS" if report.passed else "FAIL"
    elif report.when == "setup" and report.skipped:
        _ACCEPTANCE_OUTCOMES[number] = "SKIP"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_OUTCOMES:
        return
    try:
        from test_acceptance import CRITERIA
    except ImportError:
        CRITERIA = {}
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for number in sorted(_ACCEPTANCE_OUTCOMES):
        label = CRITERIA.get(number, "")
        outcome = _ACCEPTANCE_OUTCOMES[number]
        terminalreporter.write_line(f"  criterion {number:2d}: {outcome}  {label}")
