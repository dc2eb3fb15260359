from functools import lru_cache

import pytest

from rotacycle.cycles import enumerate_cycles


@lru_cache(maxsize=None)
def cached_cycles(k, c, bound):
    return tuple(enumerate_cycles(k, c, bound))


@pytest.fixture(scope="session")
def oracle():
    return cached_cycles


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
