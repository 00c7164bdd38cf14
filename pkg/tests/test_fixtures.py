from hypertab.axioms import StructureProfile
from hypertab.fixtures import FIXTURE_IDS, FIXTURES, get_fixture
from hypertab.errors import InputError

import pytest


EXPECTED_IDS = (
    "tab1", "tab2", "tab3", "tab4", "tab5", "tab6", "tab7", "tab8", "tab9",
    "ex32_bundle_1", "ex32_bundle_2", "ex32_bundle_3",
    "ex33_bundle_1", "ex33_bundle_2", "ex33_bundle_3",
    "ex34", "ex35",
)


def test_fixture_ids_complete():
    assert FIXTURE_IDS == EXPECTED_IDS


def test_get_fixture_unknown():
    with pytest.raises(InputError):
        get_fixture("tab10")


def test_expected_flags_are_known_flags():
    for fx in FIXTURES.values():
        assert set(fx.expected_flags) <= set(StructureProfile.FLAG_NAMES)


def test_orders_match_published_tables():
    for fid, order in [("tab1", 6), ("tab2", 7), ("tab3", 7), ("tab4", 7),
                       ("tab5", 6), ("tab6", 6), ("tab7", 6),
                       ("tab8", 12), ("tab9", 13)]:
        assert FIXTURES[fid].bundle.table.order == order


def test_order12_table_transcription_anchors():
    t = FIXTURES["tab8"].bundle.table
    # full-carrier cells sit where the two six-element blocks cross
    assert t.product(t.index("A"), t.index("C")) == t.full_mask
    assert t.labels_of(t.product(t.index("D"), t.index("A"))) == \
        ["A", "D", "E", "H", "I", "L"]
    assert t.labels_of(t.product(t.index("B"), t.index("C"))) == \
        ["B", "C", "F", "G", "J", "K"]
    # diagonal is idempotent singletons
    for i in range(t.order):
        assert t.product(i, i) == 1 << i
    # not commutative: D*C = {C,H} while C*D = {C,D}
    assert t.labels_of(t.product(t.index("D"), t.index("C"))) == ["C", "H"]
    assert t.labels_of(t.product(t.index("C"), t.index("D"))) == ["C", "D"]


def test_identity_extension_of_order12_table():
    t8 = FIXTURES["tab8"].bundle.table
    t9 = FIXTURES["tab9"].bundle.table
    e = t9.index("e")
    assert e == 0
    for x in range(t9.order):
        assert t9.product(x, e) == 1 << x
        assert t9.product(e, x) == 1 << x
    # non-full cells carry over unchanged; full cells absorb the identity
    for i in range(12):
        for j in range(12):
            old = t8.cells[i][j]
            new = t9.cells[i + 1][j + 1]
            if old == t8.full_mask:
                assert new == t9.full_mask
            else:
                assert new == old << 1


def test_loop_bundles_declare_their_identity():
    for fid in ("ex33_bundle_1", "ex33_bundle_2", "ex33_bundle_3"):
        bundle = FIXTURES[fid].bundle
        assert bundle.identity == bundle.table.index("1")
    assert FIXTURES["tab9"].bundle.identity == 0


def test_division_bundles_share_one_carrier():
    for fid in EXPECTED_IDS:
        bundle = FIXTURES[fid].bundle
        if bundle.divisions is not None:
            assert bundle.divisions.left.names == bundle.table.names
            assert bundle.divisions.right.names == bundle.table.names


def test_errata_marked_only_on_inconsistent_entries():
    flagged = {fid for fid, fx in FIXTURES.items() if fx.nuclei_erratum}
    assert flagged == {"tab5", "tab6"}
