"""Shared fixtures: one registry run and one figure export per session."""

import pytest

from specfun import cli
from specfun.verify import format_reports, run_suite

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def suite_reports():
    return {r.id: r for r in run_suite("all")}


@pytest.fixture(scope="session")
def suite_rerun_text():
    """Serialized reports of an independent second run, for determinism checks."""
    return format_reports(run_suite("all"))


@pytest.fixture(scope="session")
def figure_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("figures")
    assert cli.main(["figure", "all", "--out-dir", str(out)]) == 0
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, label = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {label}")
