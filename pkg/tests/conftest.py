import sys
from pathlib import Path

import pytest

# Make sibling helper modules (property_checks) importable regardless of cwd.
sys.path.insert(0, str(Path(__file__).parent))


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(label): acceptance criterion, reported pass/fail by label"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call":
        return
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    reporter = item.config.pluginmanager.get_plugin("terminalreporter")
    if reporter is not None:
        status = "PASS" if rep.passed else "FAIL"
        reporter.write_line(f"[acceptance] {status}  {marker.args[0]}")
