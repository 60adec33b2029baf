import pytest

from cubicmw import CubicSurface, build_report, build_table, enumerate_points

ZAGIER = (1, 2, 3, 4)
ZAGIER_H = 1100


@pytest.fixture(scope="session")
def zagier_surface():
    return CubicSurface.diagonal(ZAGIER, label="zagier")


@pytest.fixture(scope="session")
def registry_1100():
    return enumerate_points(ZAGIER, ZAGIER_H)


@pytest.fixture(scope="session")
def registry_200():
    return enumerate_points(ZAGIER, 200)


@pytest.fixture(scope="session")
def table_1100(registry_1100):
    return build_table(registry_1100)


@pytest.fixture(scope="session")
def report_1100(table_1100):
    return build_report(table_1100)
