import sys

import pytest

from quiverqg.quiver import preset, random_nu
from quiverqg.session import Session

_SESSIONS = {}


def session_for(name, max_height=4, seed=None, nu_preset="one"):
    key = (name, max_height, seed, nu_preset)
    s = _SESSIONS.get(key)
    if s is None:
        q = preset(name, nu_preset)
        if seed is not None:
            q = random_nu(q, seed, max_height)
        s = Session(q, max_height, seed=seed or 0)
        _SESSIONS[key] = s
    return s


@pytest.fixture
def sess():
    return session_for


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
