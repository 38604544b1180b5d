import functools

import pytest

from twozero import build_code_params, build_field

SWEEP = [(7, 1, 2, 3), (13, 1, 2, 3), (13, 1, 2, 6), (19, 1, 2, 3), (19, 1, 2, 9)]


@functools.lru_cache(maxsize=None)
def field(p, s=1, m=1):
    return build_field(p, s, m)


@functools.lru_cache(maxsize=None)
def code(p, s, m, h, e):
    return build_code_params(field(p, s, m), h, e)


@pytest.fixture(scope="session")
def gf49():
    return field(7, 1, 2)


@pytest.fixture(scope="session")
def example_code():
    return code(7, 1, 2, 3, 3)


_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; call with (label, passed)."""
    def record(label, passed):
        _ACCEPTANCE.append((label, bool(passed)))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
