import numpy as np
import pytest

from netspect import graphs

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance pass/fail lines after capture is released."""
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def direct_dft_magnitudes(x):
    """Independent O(T^2) summation of the transform definition (oracle)."""
    x = np.asarray(x, dtype=np.float64)
    T = x.size
    t = np.arange(T)
    out = np.empty(T)
    for f in range(T):
        w = np.exp(-2j * np.pi * f * t / T)
        out[f] = abs((x * w).sum())
    return out


def path_graph(n):
    return graphs.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n):
    return graphs.from_edges(n, [(0, i) for i in range(1, n)])


def cycle_graph(n):
    return graphs.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def small_suite():
    """The exhaustive n <= 12 oracle suite: paths, stars, cycles, random ER."""
    cases = []
    for n in range(3, 13):
        cases.append((f"path{n}", path_graph(n)))
        cases.append((f"star{n}", star_graph(n)))
        cases.append((f"cycle{n}", cycle_graph(n)))
    for n in (6, 8, 10, 12):
        for t in range(3):
            cases.append((f"er{n}_{t}",
                          graphs.erdos_renyi(n, 0.4, 1000 + 10 * n + t)))
    return cases


@pytest.fixture(scope="session")
def suite_graphs():
    return small_suite()
