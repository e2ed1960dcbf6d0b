import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_CRITERIA = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_CRITERIA] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line: criterion(number, title, ok, detail)."""
    table = request.config.stash[_CRITERIA]

    def record(number, title, ok, detail=""):
        table[number] = (title, bool(ok), detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    table = config.stash[_CRITERIA]
    if not table:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(table):
        title, ok, detail = table[number]
        line = f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
