import pytest

from rackring import BurnsideRing, EnumerationFilter, enumerate_racks


@pytest.fixture(scope="session")
def racks_by_order():
    """All rack classes up to order 5, canonical representatives."""
    return {n: enumerate_racks(EnumerationFilter(n)) for n in range(6)}


@pytest.fixture(scope="session")
def quandles_by_order():
    return {
        n: enumerate_racks(EnumerationFilter(n, quandle_only=True)) for n in range(6)
    }


@pytest.fixture(scope="session")
def connected_racks_by_order(racks_by_order):
    from rackring import is_connected

    return {
        n: [t for t in tables if is_connected(t)]
        for n, tables in racks_by_order.items()
    }


@pytest.fixture(scope="session")
def connected_quandles_by_order(quandles_by_order):
    from rackring import is_connected

    return {
        n: [t for t in tables if is_connected(t)]
        for n, tables in quandles_by_order.items()
    }


@pytest.fixture()
def ring():
    return BurnsideRing()
