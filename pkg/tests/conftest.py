import pytest

from heckebound import systems

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def A2():
    return systems.type_a(2)


@pytest.fixture(scope="session")
def B2():
    return systems.type_b(2)


@pytest.fixture(scope="session")
def G2():
    return systems.dihedral(6)


@pytest.fixture(scope="session")
def A3():
    return systems.type_a(3)


@pytest.fixture(scope="session")
def affine_A2():
    return systems.affine_a2()


@pytest.fixture(scope="session")
def affine_B2():
    return systems.affine_b2()


@pytest.fixture(scope="session")
def tri334():
    return systems.triangle(3, 3, 4)


@pytest.fixture(scope="session")
def fork():
    return systems.g2_a3_fork()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
