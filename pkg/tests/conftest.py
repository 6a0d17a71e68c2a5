import itertools

import pytest

from grsets.expr import z2_generators
from grsets.group import named_group

# filled by test_acceptance.py, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def Z2():
    return named_group("cyclic", 2)


@pytest.fixture
def S3():
    # element i + 3j is r^i s^j
    return named_group("dihedral", 3)


@pytest.fixture
def t():
    return z2_generators((10,))


def s3_table_from_permutations():
    """Cayley table of Sym({0,1,2}) built independently from permutation composition."""
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(a[b[x]] for x in range(3))] for b in perms] for a in perms]
