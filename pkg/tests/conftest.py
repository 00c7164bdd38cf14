import pytest

from hypertab.core import HyperTable
from hypertab.fixtures import FIXTURES
from hypertab.groups import cyclic_group, from_cayley_table
from hypertab.search import random_hypergroupoid


@pytest.fixture(scope="session")
def z3():
    """Cyclic group of order 3 as an all-singleton table."""
    return from_cayley_table(cyclic_group(3))


def table(fixture_id: str) -> HyperTable:
    return FIXTURES[fixture_id].bundle.table


def reproductive_table(order: int, seed: int, density: float = 0.3) -> HyperTable:
    """Random table guaranteed reproductive: a cyclic latin base plus noise."""
    noisy = random_hypergroupoid(order, density, seed)
    cells = tuple(
        tuple(noisy.cells[i][j] | (1 << ((i + j) % order)) for j in range(order))
        for i in range(order)
    )
    return HyperTable(noisy.names, cells)


def singleton_table(order: int, seed: int) -> HyperTable:
    """Random all-singleton table (a classical groupoid)."""
    import random

    rng = random.Random(seed)
    cells = tuple(
        tuple(1 << rng.randrange(order) for _ in range(order)) for _ in range(order)
    )
    return HyperTable(tuple(str(i) for i in range(order)), cells)
