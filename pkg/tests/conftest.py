import numpy as np
import pytest

from fusionring.families import (
    ising_ring,
    near_group_ring,
    psl2_level8_ring,
    svect_ring,
    yang_lee_ring,
)
from fusionring.groups import group_by_name
from fusionring.ring import FusionRing, deligne_product


@pytest.fixture(scope="session")
def ising():
    return ising_ring()


@pytest.fixture(scope="session")
def yang_lee():
    return yang_lee_ring()


@pytest.fixture(scope="session")
def psl2():
    return psl2_level8_ring()


@pytest.fixture(scope="session")
def ng21():
    return near_group_ring(group_by_name("Z2"), 1)


@pytest.fixture(scope="session")
def svect():
    return svect_ring()


@pytest.fixture(scope="session")
def yl_z2(yang_lee, svect):
    return deligne_product(yang_lee, svect)


@pytest.fixture(scope="session")
def zoo(ising, yang_lee, psl2, ng21, svect, yl_z2):
    """Name -> ring map covering every shape the suite leans on."""
    return {
        "ising": ising,
        "yang_lee": yang_lee,
        "psl2_level8": psl2,
        "near_group_z2_1": ng21,
        "svect": svect,
        "yl_x_z2": yl_z2,
    }


def perturbed(ring: FusionRing, i: int, j: int, k: int, value: int) -> FusionRing:
    """Copy of `ring` with one structure constant overwritten (no validation)."""
    n = ring.N.copy()
    n[i, j, k] = value
    return FusionRing(ring.labels, ring.dual, n)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    acc = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            if "test_acceptance.py::" in rep.nodeid and rep.when == "call":
                acc.append(rep)
    if not acc:
        return
    acc.sort(key=lambda r: r.nodeid)
    terminalreporter.section("acceptance criteria")
    for rep in acc:
        word = "PASS" if rep.passed else "FAIL"
        terminalreporter.write_line(f"{word}  {rep.nodeid.split('::')[-1]}")
