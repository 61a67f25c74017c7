import numpy as np
import pytest

from kneser_bandwidth.combinatorics import binom
from kneser_bandwidth.layout import Labeling


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_labeling(n, r, rng):
    return Labeling.from_order(n, r, list(rng.permutation(binom(n, r))))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: int(k[1:])):
        terminalreporter.write_line(RESULTS[key])
