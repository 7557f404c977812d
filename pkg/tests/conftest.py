import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_results = {}
_titles = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _titles[m.args[0]] = m.args[1]
            _results.setdefault(m.args[0], [])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _results[m.args[0]].append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_results):
        runs = _results[number]
        if not runs:
            continue
        failed = [name for name, ok in runs if not ok]
        verdict = "FAIL" if failed else "PASS"
        line = f"{verdict} criterion {number:2d}: {_titles[number]} ({len(runs) - len(failed)}/{len(runs)} tests)"
        if failed:
            line += " failing: " + ", ".join(failed)
        tr.write_line(line)
