"""Suite-wide settings: every interval evaluation is width-checked."""

import pytest

from birur import isolation


@pytest.fixture(scope="session", autouse=True)
def _width_checked_interval_eval():
    isolation.WIDTH_CHECK = True
    isolation.WIDTH_VIOLATIONS.clear()
    yield
    isolation.WIDTH_CHECK = False


def pytest_sessionfinish(session, exitstatus):
    if isolation.WIDTH_VIOLATIONS:
        session.exitstatus = 1
        print("\ninterval_eval width-bound violations:",
              len(isolation.WIDTH_VIOLATIONS))
        for item in isolation.WIDTH_VIOLATIONS[:5]:
            print("  ", item)
