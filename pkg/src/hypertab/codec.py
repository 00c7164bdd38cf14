"""Canonical JSON codec for structure files.

A structure file is a UTF-8 JSON object with keys in this order:
``name``, ``elements``, ``op``, then optionally ``left_division``,
``right_division``, ``identity``, ``inverse``.  ``op`` and the division
tables are n x n arrays of arrays of element names.  Serialization is
canonical: two-space indent, fixed key order, cell members sorted by
carrier index, trailing newline; parse(serialize(b)) == b and the bytes
are stable across runs.

Group files reuse the format with an all-singleton ``op`` plus mandatory
``identity`` and ``inverse``.
"""

from __future__ import annotations

import json

from .core import DivisionPair, HyperTable, StructureBundle, validate_table
from .errors import NotClassicalError, ParseError
from .groups import GroupTable


def _table_to_rows(table: HyperTable) -> list[list[list[str]]]:
    return [[table.labels_of(cell) for cell in row] for row in table.cells]


def bundle_to_obj(bundle: StructureBundle) -> dict:
    """Plain-data form of a bundle, in canonical key order."""
    table = bundle.table
    obj: dict = {
        "name": bundle.name,
        "elements": list(table.names),
        "op": _table_to_rows(table),
    }
    if bundle.divisions is not None:
        obj["left_division"] = _table_to_rows(bundle.divisions.left)
        obj["right_division"] = _table_to_rows(bundle.divisions.right)
    if bundle.identity is not None:
        obj["identity"] = table.names[bundle.identity]
    if bundle.inverse is not None:
        obj["inverse"] = {table.names[i]: table.names[v]
                          for i, v in enumerate(bundle.inverse)}
    return obj


def serialize_structure(bundle: StructureBundle) -> bytes:
    return (json.dumps(bundle_to_obj(bundle), indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _require(obj: dict, key: str, kind, location: str):
    if key not in obj:
        raise ParseError(f"missing key {key!r}", location)
    value = obj[key]
    if not isinstance(value, kind):
        raise ParseError(f"key {key!r} must be {kind.__name__}", f"{location}.{key}")
    return value


def _parse_rows(value, n: int, key: str) -> list[list[list[str]]]:
    if not isinstance(value, list) or len(value) != n:
        raise ParseError(f"{key!r} must be a {n}x{n} array", key)
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"row must have {n} cells", f"{key}[{i}]")
        cells = []
        for j, cell in enumerate(row):
            if not isinstance(cell, list) or not all(isinstance(x, str) for x in cell):
                raise ParseError("cell must be an array of element names", f"{key}[{i}][{j}]")
            cells.append(cell)
        rows.append(cells)
    return rows


def parse_structure(data: bytes | str) -> StructureBundle:
    """Parse and fully validate a structure file."""
    try:
        text = data.decode("utf-8") if isinstance(data, bytes) else data
    except UnicodeDecodeError as exc:
        raise ParseError(f"file is not UTF-8: {exc.reason}", f"byte {exc.start}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(obj, dict):
        raise ParseError("top level must be a JSON object", "document")
    name = _require(obj, "name", str, "document")
    elements = _require(obj, "elements", list, "document")
    if not elements or not all(isinstance(x, str) for x in elements):
        raise ParseError("'elements' must be a non-empty array of strings", "elements")
    n = len(elements)
    op_rows = _parse_rows(_require(obj, "op", list, "document"), n, "op")
    table = validate_table(elements, op_rows)

    divisions = None
    if ("left_division" in obj) != ("right_division" in obj):
        raise ParseError("left_division and right_division must appear together", "document")
    if "left_division" in obj:
        left = validate_table(elements, _parse_rows(obj["left_division"], n, "left_division"))
        right = validate_table(elements, _parse_rows(obj["right_division"], n, "right_division"))
        divisions = DivisionPair(left, right)

    identity = None
    if "identity" in obj:
        if not isinstance(obj["identity"], str):
            raise ParseError("'identity' must be an element name", "identity")
        identity = table.index(obj["identity"])

    inverse = None
    if "inverse" in obj:
        inv_obj = obj["inverse"]
        if not isinstance(inv_obj, dict):
            raise ParseError("'inverse' must be an object", "inverse")
        inv = [None] * n
        for key, value in inv_obj.items():
            if not isinstance(value, str):
                raise ParseError("'inverse' values must be element names", f"inverse.{key}")
            inv[table.index(key)] = table.index(value)
        missing = [table.names[i] for i, v in enumerate(inv) if v is None]
        if missing:
            raise ParseError(f"'inverse' is missing {missing}", "inverse")
        inverse = tuple(inv)

    unknown = set(obj) - {"name", "elements", "op", "left_division",
                          "right_division", "identity", "inverse"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}", "document")
    return StructureBundle(name=name, table=table, divisions=divisions,
                           identity=identity, inverse=inverse)


def parse_group(data: bytes | str) -> GroupTable:
    """Parse a group file: all-singleton op with identity and inverse."""
    bundle = parse_structure(data)
    if bundle.identity is None or bundle.inverse is None:
        raise ParseError("group files must declare 'identity' and 'inverse'", "document")
    table = bundle.table
    n = table.order
    cayley = []
    for i in range(n):
        row = []
        for j, cell in enumerate(table.cells[i]):
            if cell & (cell - 1):
                raise NotClassicalError(i, j)
            row.append(cell.bit_length() - 1)
        cayley.append(tuple(row))
    group = GroupTable.from_cayley(table.names, cayley)
    if group.identity != bundle.identity or group.inverse != bundle.inverse:
        raise ParseError("declared identity/inverse disagree with the table", "document")
    return group


def group_to_bundle(group: GroupTable, name: str) -> StructureBundle:
    """A group rendered in the shared file format (singleton cells)."""
    cells = tuple(tuple(1 << v for v in row) for row in group.cayley)
    return StructureBundle(
        name=name,
        table=HyperTable(group.names, cells),
        identity=group.identity,
        inverse=group.inverse,
    )
