from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

_criteria: dict[int, list[tuple[str, str]]] = {}


@pytest.fixture
def fixture_dir():
    return FIXTURES


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.setdefault(crit, []).append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_criteria):
        parts = _criteria[crit]
        ok = all(outcome == "passed" for _, outcome in parts)
        failed = [name for name, outcome in parts if outcome != "passed"]
        suffix = f"  (failing: {', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {crit}: {'PASS' if ok else 'FAIL'}{suffix}")
