import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_acceptance: list[tuple[str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and rep.when == "call":
        _acceptance.append((marker.args[0], "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in sorted(_acceptance, key=lambda x: int(x[0].split()[0])):
        terminalreporter.write_line(f"[{verdict}] criterion {name}")
