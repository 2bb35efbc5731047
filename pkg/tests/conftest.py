import numpy as np
import pytest

from evonet.genome import InitRanges, MatrixGenome, random_matrix_genome
from evonet.harness.datasets import Dataset, parity_table, xor_table


def random_matrix(rng, m=2, N=4, n=1, hidden=(0, 4), connections=(1, 12), weights=(-2.0, 2.0)):
    hidden = (min(hidden[0], N), min(hidden[1], N))
    return random_matrix_genome(InitRanges(hidden, connections, weights), rng, m, N, n)


def matrix_from_edges(m, N, n, edges, exists=None):
    """MatrixGenome from ``{(i, j): w}``; hidden neurons exist by default."""
    size = m + N + n
    conn = np.zeros((size, size), dtype=np.int8)
    w = np.zeros((size, size))
    for (i, j), value in edges.items():
        conn[i, j] = 1
        w[i, j] = value
    exists = np.ones(N, dtype=np.int8) if exists is None else np.asarray(exists)
    return MatrixGenome(m, N, n, conn, w, exists)


@pytest.fixture
def xor_data():
    X, Y = xor_table()
    return Dataset.full(np.hstack([X, np.ones((4, 1))]), Y, "xor")


@pytest.fixture
def parity3_data():
    X, Y = parity_table(3)
    return Dataset.full(np.hstack([X, np.ones((8, 1))]), Y, "parity:3")


# ---------------------------------------------------------------- acceptance

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, verdict = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {title}")
