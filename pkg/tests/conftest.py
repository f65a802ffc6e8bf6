import itertools

import numpy as np
import pytest

from radsq.quiver import Quiver, is_connected

ACCEPTANCE: dict[int, tuple[str, bool]] = {}
ACCEPTANCE_NOTES: list[str] = []


def small_corpus(n_max: int, max_mult: int):
    """Every connected quiver with at most ``n_max`` vertices and entries at most ``max_mult``."""
    out = []
    for n in range(1, n_max + 1):
        for flat in itertools.product(range(max_mult + 1), repeat=n * n):
            q = Quiver.from_matrix(np.array(flat).reshape(n, n).tolist())
            if is_connected(q):
                out.append(q)
    return out


@pytest.fixture(scope="session")
def corpus_n2():
    return small_corpus(2, 2)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", tuple(mark.args)))


def pytest_runtest_logreport(report):
    crit = next((v for k, v in report.user_properties if k == "criterion"), None)
    if crit is None:
        return
    number, title = crit
    if report.when == "call" or (report.when == "setup" and report.failed):
        ok = report.passed and ACCEPTANCE.get(number, ("", True))[1]
        ACCEPTANCE[number] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
    for note in ACCEPTANCE_NOTES:
        terminalreporter.write_line(f"  note: {note}")


@pytest.fixture
def note():
    return ACCEPTANCE_NOTES.append
