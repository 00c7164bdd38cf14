"""Hyperoperation tables over a finite carrier, with bit-vector set algebra.

A hyperoperation sends each ordered pair of carrier elements to a
non-empty subset of the carrier.  Subsets are plain ints used as bit
vectors (bit ``i`` set = element ``i`` present), so unions, intersections
and comparisons inside the exhaustive scans are single machine ops.
Elements are indexed ``0..n-1`` internally; display names only appear at
the I/O boundary.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateMemberWarning,
    DuplicateNameError,
    EmptyCellError,
    InputError,
    NotDivisibleError,
    UnknownElementError,
)

# One element set per machine word; all published fixtures have n <= 13 and
# the subset-enumeration oracle is exponential anyway.
MAX_ORDER = 64


def mask_of(indices: Iterable[int]) -> int:
    """Bit-vector with the given element indices set."""
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set element indices in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def elements_of(mask: int) -> list[int]:
    return list(iter_bits(mask))


class Members(int):
    """An element mask tagged as set-valued, so witness formatters can
    tell it apart from a bare element index."""

    __slots__ = ()



@dataclass(frozen=True)
class HyperTable:
    """An order-n carrier plus an n x n table of non-empty member sets."""

    names: tuple[str, ...]
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.names)
        if n < 1:
            raise InputError("carrier must be non-empty")
        if n > MAX_ORDER:
            raise InputError(f"order {n} exceeds the supported maximum of {MAX_ORDER}")
        if len(set(self.names)) != n:
            seen = set()
            for nm in self.names:
                if nm in seen:
                    raise DuplicateNameError(nm)
                seen.add(nm)
        if len(self.cells) != n:
            raise InputError(f"table has {len(self.cells)} rows for order {n}")
        full = (1 << n) - 1
        for i, row in enumerate(self.cells):
            if len(row) != n:
                raise InputError(f"row {i} has {len(row)} cells for order {n}")
            for j, cell in enumerate(row):
                if cell == 0:
                    raise EmptyCellError(i, j)
                if cell & ~full:
                    raise InputError(f"cell ({i}, {j}) has bits outside the carrier")

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.names)) - 1

    def index(self, label: str) -> int:
        try:
            return self.names.index(label)
        except ValueError:
            raise UnknownElementError(label) from None

    def mask_from_labels(self, labels: Iterable[str]) -> int:
        return mask_of(self.index(lb) for lb in labels)

    def labels_of(self, mask: int) -> list[str]:
        return [self.names[i] for i in iter_bits(mask)]

    def format_set(self, mask: int) -> str:
        return "{" + ", ".join(self.labels_of(mask)) + "}"

    def product(self, a: int, b: int) -> int:
        """The stored cell for a pair of element indices."""
        n = len(self.names)
        if not (0 <= a < n and 0 <= b < n):
            raise InputError(f"index pair ({a}, {b}) out of range for order {n}")
        return self.cells[a][b]

    def set_product(self, left: int, right: int) -> int:
        """Union extension: the union of ``a . b`` over a in left, b in right.

        Empty iff either operand is empty; the non-empty codomain
        restriction applies to stored cells, not to this derived union.
        """
        if (left | right) & ~self.full_mask:
            raise InputError("operand has bits outside the carrier")
        out = 0
        for a in iter_bits(left):
            row = self.cells[a]
            for b in iter_bits(right):
                out |= row[b]
        return out

    def row_union(self, x: int) -> int:
        m = 0
        for cell in self.cells[x]:
            m |= cell
        return m

    def col_union(self, x: int) -> int:
        m = 0
        for row in self.cells:
            m |= row[x]
        return m

    def is_all_singleton(self) -> bool:
        return all(cell & (cell - 1) == 0 for row in self.cells for cell in row)


def validate_table(names: Sequence[str], raw_cells: Sequence[Sequence[Sequence[str]]],
                   ) -> HyperTable:
    """Build a HyperTable from label lists, checking every invariant.

    Duplicate labels inside a cell are collapsed with a
    DuplicateMemberWarning; empty cells and unknown labels are errors.
    """
    names = tuple(names)
    seen: set[str] = set()
    for nm in names:
        if nm in seen:
            raise DuplicateNameError(nm)
        seen.add(nm)
    if len(names) > MAX_ORDER:
        raise InputError(f"order {len(names)} exceeds the supported maximum of {MAX_ORDER}")
    index = {nm: i for i, nm in enumerate(names)}
    n = len(names)
    if len(raw_cells) != n:
        raise InputError(f"table has {len(raw_cells)} rows for order {n}")
    rows = []
    for i, raw_row in enumerate(raw_cells):
        if len(raw_row) != n:
            raise InputError(f"row {i} has {len(raw_row)} cells for order {n}")
        row = []
        for j, members in enumerate(raw_row):
            if not members:
                raise EmptyCellError(i, j)
            mask = 0
            for lb in members:
                if lb not in index:
                    raise UnknownElementError(lb, i, j)
                bit = 1 << index[lb]
                if mask & bit:
                    warnings.warn(
                        f"cell ({i}, {j}) lists {lb!r} more than once; collapsed",
                        DuplicateMemberWarning,
                        stacklevel=2,
                    )
                mask |= bit
            row.append(mask)
        rows.append(tuple(row))
    return HyperTable(names, tuple(rows))


@dataclass(frozen=True)
class DivisionPair:
    """Left (``\\``) and right (``/``) division tables for a base table."""

    left: HyperTable
    right: HyperTable

    def __post_init__(self):
        if self.left.names != self.right.names:
            raise InputError("division tables disagree on the carrier")


def derive_divisions(table: HyperTable) -> DivisionPair:
    """Canonical division tables: x\\z = {y : z in x.y},  z/y = {x : z in x.y}.

    Defined exactly when every element occurs in every row and column
    (reproduction); otherwise some cell would be empty and a
    NotDivisibleError identifies the first failing row or column.
    """
    n = table.order
    full = table.full_mask
    for x in range(n):
        ru = table.row_union(x)
        if ru != full:
            raise NotDivisibleError("row", x, full & ~ru, table.names)
        cu = table.col_union(x)
        if cu != full:
            raise NotDivisibleError("column", x, full & ~cu, table.names)
    left = [[0] * n for _ in range(n)]
    right = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            for z in iter_bits(table.cells[x][y]):
                left[x][z] |= 1 << y
                right[z][y] |= 1 << x
    mk = lambda rows: HyperTable(table.names, tuple(tuple(r) for r in rows))
    return DivisionPair(mk(left), mk(right))


@dataclass(frozen=True)
class StructureBundle:
    """A hyperoperation table plus the optional data some classes need.

    ``identity`` is a carrier index, ``inverse`` a total index-to-index
    map; labels are resolved at the I/O boundary.  ``provenance`` is
    free-text annotation the file format does not carry, so it does not
    take part in equality.
    """

    name: str
    table: HyperTable
    divisions: DivisionPair | None = None
    identity: int | None = None
    inverse: tuple[int, ...] | None = None
    provenance: str = field(default="", compare=False)

    def __post_init__(self):
        n = self.table.order
        if self.divisions is not None and self.divisions.left.names != self.table.names:
            raise InputError("division tables disagree with the base table carrier")
        if self.identity is not None and not (0 <= self.identity < n):
            raise InputError(f"identity index {self.identity} out of range")
        if self.inverse is not None:
            if len(self.inverse) != n or any(not (0 <= v < n) for v in self.inverse):
                raise InputError("inverse map must be total on the carrier")
