"""Shared fixtures and the acceptance report.

Tests marked ``@pytest.mark.criterion(n, "title")`` are collected into a
PASS/FAIL table printed at the end of the run, one line per criterion.
"""

from __future__ import annotations

from pathlib import Path

import pytest

from pytharr.catalog import theta_triple

ROOT = Path(__file__).resolve().parent.parent
INSTANCES = ROOT / "instances"

_results: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not (report.when == "setup" and report.failed):
        return
    number, title = marker.args
    entry = _results.setdefault(number, {"title": title, "ok": True, "tests": []})
    entry["tests"].append(item.name)
    if report.failed:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        entry = _results[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {entry['title']}")


@pytest.fixture
def theta():
    return theta_triple()


@pytest.fixture
def instances_dir():
    return INSTANCES
