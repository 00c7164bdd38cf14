import json

import pytest

from hypertab.codec import (
    bundle_to_obj,
    group_to_bundle,
    parse_group,
    parse_structure,
    serialize_structure,
)
from hypertab.core import StructureBundle, derive_divisions
from hypertab.errors import (
    DuplicateMemberWarning,
    NotClassicalError,
    ParseError,
    UnknownElementError,
)
from hypertab.fixtures import FIXTURES
from hypertab.groups import cyclic_group, symmetric_group


def test_round_trip_all_bundled_structures():
    for fid, fx in FIXTURES.items():
        payload = serialize_structure(fx.bundle)
        parsed = parse_structure(payload)
        assert parsed == fx.bundle, fid
        assert serialize_structure(parsed) == payload, fid


def test_serialization_is_canonical_and_stable():
    bundle = FIXTURES["ex33_bundle_1"].bundle
    a = serialize_structure(bundle)
    b = serialize_structure(bundle)
    assert a == b
    obj = json.loads(a)
    assert list(obj) == ["name", "elements", "op", "left_division",
                         "right_division", "identity"]
    # members are listed in carrier order
    assert obj["op"][1][2] == ["4", "6"]
    assert a.startswith(b"{\n  \"name\"")
    assert a.endswith(b"\n")


def test_round_trip_bundle_with_divisions_and_inverse(z3):
    bundle = StructureBundle(name="z3", table=z3,
                             divisions=derive_divisions(z3),
                             identity=0, inverse=(0, 2, 1))
    assert parse_structure(serialize_structure(bundle)) == bundle


def test_parse_rejects_malformed_json():
    with pytest.raises(ParseError) as err:
        parse_structure(b"{not json")
    assert "line 1" in err.value.location


def test_parse_rejects_non_utf8():
    with pytest.raises(ParseError) as err:
        parse_structure(b"\xff\xfe{}")
    assert "UTF-8" in str(err.value)


def test_parse_rejects_wrong_shapes():
    obj = {"name": "x", "elements": ["a", "b"],
           "op": [[["a"], ["b"]]]}  # one row only
    with pytest.raises(ParseError):
        parse_structure(json.dumps(obj))
    obj["op"] = [[["a"], ["b"]], [["a"]]]
    with pytest.raises(ParseError):
        parse_structure(json.dumps(obj))
    obj["op"] = [[["a"], ["b"]], [["a"], [1]]]
    with pytest.raises(ParseError):
        parse_structure(json.dumps(obj))


def test_parse_rejects_missing_or_unknown_keys():
    with pytest.raises(ParseError):
        parse_structure(json.dumps({"elements": ["a"], "op": [[["a"]]]}))
    with pytest.raises(ParseError):
        parse_structure(json.dumps(
            {"name": "x", "elements": ["a"], "op": [[["a"]]], "extra": 1}))
    with pytest.raises(ParseError):
        parse_structure(json.dumps(
            {"name": "x", "elements": ["a"], "op": [[["a"]]],
             "left_division": [[["a"]]]}))  # right_division missing


def test_parse_rejects_unknown_identity_label():
    obj = {"name": "x", "elements": ["a"], "op": [[["a"]]], "identity": "z"}
    with pytest.raises(UnknownElementError):
        parse_structure(json.dumps(obj))


def test_parse_rejects_partial_inverse():
    obj = {"name": "x", "elements": ["a", "b"],
           "op": [[["a"], ["b"]], [["b"], ["a"]]],
           "inverse": {"a": "a"}}
    with pytest.raises(ParseError) as err:
        parse_structure(json.dumps(obj))
    assert "missing" in str(err.value)


def test_parse_collapses_duplicate_cell_members():
    obj = {"name": "x", "elements": ["a", "b"],
           "op": [[["a", "a"], ["b"]], [["b"], ["a", "b"]]]}
    with pytest.warns(DuplicateMemberWarning):
        bundle = parse_structure(json.dumps(obj))
    assert bundle.table.cells[0][0] == 0b01


def test_group_file_round_trip():
    s3 = symmetric_group(3)
    payload = serialize_structure(group_to_bundle(s3, "sym3"))
    group = parse_group(payload)
    assert group == s3


def test_parse_group_requires_identity_and_inverse():
    z2 = cyclic_group(2)
    bundle = group_to_bundle(z2, "z2")
    stripped = StructureBundle(name="z2", table=bundle.table)
    with pytest.raises(ParseError):
        parse_group(serialize_structure(stripped))


def test_parse_group_rejects_multivalued_cells():
    payload = serialize_structure(FIXTURES["tab9"].bundle)
    obj = json.loads(payload)
    obj["inverse"] = {nm: nm for nm in obj["elements"]}
    with pytest.raises(NotClassicalError):
        parse_group(json.dumps(obj))


def test_parse_group_rejects_wrong_declared_inverse():
    z3_group = cyclic_group(3)
    obj = bundle_to_obj(group_to_bundle(z3_group, "z3"))
    obj["inverse"] = {"0": "0", "1": "1", "2": "2"}
    with pytest.raises(ParseError):
        parse_group(json.dumps(obj))
