from fractions import Fraction as Q

import pytest

from lipkr.metric import rearrangement_metric, random_generic_metric, uniform_metric


@pytest.fixture(scope="session")
def rm3():
    return rearrangement_metric(3)


@pytest.fixture(scope="session")
def rm4():
    return rearrangement_metric(4)


@pytest.fixture(scope="session")
def uniform4():
    return uniform_metric(4)


@pytest.fixture(scope="session")
def generic_metrics():
    """A few seeded random generic metrics for each n in 2..5."""
    return {n: [random_generic_metric(n, seed) for seed in range(3)] for n in range(2, 6)}


def tree(*edges):
    return frozenset(edges)


Q = Q


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
