import pytest

from hypertab.axioms import check_associativity, check_reproduction, classify
from hypertab.errors import InputError
from hypertab.nuclei import SIDES, nucleus
from hypertab.search import SearchSpec, random_hypergroupoid, search_structures

GOLDEN_RANDOM_5_04_7 = (
    (11, 11, 19, 17, 26),
    (11, 26, 9, 18, 16),
    (18, 2, 2, 1, 2),
    (20, 12, 9, 3, 28),
    (21, 19, 1, 8, 27),
)

GOLDEN_POLYLOOP_4_SEED1 = ((1, 2, 4, 8), (2, 8, 1, 4), (4, 2, 1, 8), (8, 5, 10, 3))


def test_polyloop_search_finds_and_reclassifies():
    spec = SearchSpec(order=4, require={"polyloop": True}, seed=1, node_budget=100_000)
    found = search_structures(spec)
    assert len(found) == 1
    bundle = found[0]
    assert bundle.table.cells == GOLDEN_POLYLOOP_4_SEED1
    profile = classify(bundle)
    assert profile.polyloop.holds
    assert profile.identity == 0


def test_search_is_deterministic():
    spec = SearchSpec(order=4, require={"polyloop": True}, seed=1, node_budget=100_000)
    a = search_structures(spec)
    b = search_structures(spec)
    assert a == b
    other = search_structures(SearchSpec(order=4, require={"polyloop": True},
                                         seed=2, node_budget=100_000))
    assert other and other[0].table.cells != a[0].table.cells


def test_search_nonassociative_polyloop():
    spec = SearchSpec(order=4,
                      require={"polyloop": True, "semihypergroup": False},
                      seed=1, node_budget=100_000)
    found = search_structures(spec)
    assert found
    profile = classify(found[0])
    assert profile.polyloop.holds
    assert profile.semihypergroup.holds is False


def test_search_order_one_unique_table():
    found = search_structures(SearchSpec(order=1, require={}, seed=9))
    assert len(found) == 1
    assert found[0].table.cells == ((1,),)


def test_search_order_six_polyloop():
    # same class as the bundled order-6 loop tables
    found = search_structures(SearchSpec(order=6, require={"polyloop": True},
                                         seed=1, node_budget=200_000))
    assert found
    profile = classify(found[0])
    assert profile.polyloop.holds
    assert profile.identity == 0


def test_search_multiple_results_distinct():
    spec = SearchSpec(order=3, require={"quasihypergroup": True}, seed=4,
                      node_budget=50_000, count=3)
    found = search_structures(spec)
    assert len(found) == 3
    assert len({b.table.cells for b in found}) == 3
    for b in found:
        assert check_reproduction(b.table).holds


def test_search_exhausts_on_unsatisfiable_spec():
    # all-singleton tables with a strict identity at order 3 are the cyclic
    # group, which is associative, so nothing can match
    spec = SearchSpec(order=3,
                      require={"polyloop": True, "semihypergroup": False},
                      cell_size_max=1, seed=1, node_budget=200_000)
    assert search_structures(spec) == []


def test_search_validates_spec():
    with pytest.raises(InputError):
        SearchSpec(order=9)
    with pytest.raises(InputError):
        SearchSpec(order=3, require={"shiny": True})
    with pytest.raises(InputError):
        SearchSpec(order=3, cell_size_max=0)
    with pytest.raises(InputError):
        SearchSpec(order=3, node_budget=0)


def test_random_hypergroupoid_golden():
    t = random_hypergroupoid(5, 0.4, 7)
    assert t.cells == GOLDEN_RANDOM_5_04_7
    assert random_hypergroupoid(5, 0.4, 7).cells == t.cells


def test_random_hypergroupoid_density_one_is_total():
    t = random_hypergroupoid(4, 1.0, 0)
    assert all(cell == t.full_mask for row in t.cells for cell in row)
    assert check_associativity(t).holds
    assert check_reproduction(t).holds
    for side in SIDES:
        assert nucleus(t, 1, side) == t.full_mask


def test_random_hypergroupoid_order_one():
    t = random_hypergroupoid(1, 0.5, 3)
    assert t.cells == ((1,),)


def test_random_hypergroupoid_validates_args():
    with pytest.raises(InputError):
        random_hypergroupoid(0, 0.5, 1)
    with pytest.raises(InputError):
        random_hypergroupoid(4, 0.0, 1)
    with pytest.raises(InputError):
        random_hypergroupoid(4, 1.5, 1)
