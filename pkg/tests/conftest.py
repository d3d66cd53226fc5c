import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from supersolv import catalog
from supersolv.perm import Perm


def cyc(n, *cycles):
    return Perm.from_cycles(n, cycles)


@pytest.fixture(scope="session")
def S3():
    return catalog.symmetric(3)


@pytest.fixture(scope="session")
def S4():
    return catalog.symmetric(4)


@pytest.fixture(scope="session")
def A4():
    return catalog.alternating(4)


@pytest.fixture(scope="session")
def A5():
    return catalog.alternating(5)


@pytest.fixture(scope="session")
def Q8():
    return catalog.quaternion8()


@pytest.fixture(scope="session")
def V4():
    return catalog.elementary_abelian(2, 2)


@pytest.fixture(scope="session")
def std_catalog():
    return catalog.standard_catalog()


ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record_criterion():
    def record(key: str, ok: bool, detail: str = ""):
        ACCEPTANCE_RESULTS[key] = (ok, detail)
        assert ok, f"criterion {key} failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}: {detail}")
