import numpy as np
import pytest

from zpramsey.field import ZpSubset, make_context


@pytest.fixture(scope="session")
def ctx_cache():
    cache = {}

    def get(p):
        if p not in cache:
            cache[p] = make_context(p)
        return cache[p]

    return get


def random_subset(rng, p, density=None):
    if density is None:
        density = rng.uniform(0.05, 1.0)
    return ZpSubset(p, rng.random(p) < density)


@pytest.fixture
def rng():
    return np.random.default_rng(20091030)


ACCEPTANCE_LINES = []


def record(criterion, ok, message):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {message}")
    print(ACCEPTANCE_LINES[-1])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
