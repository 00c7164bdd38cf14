"""Backtracking discovery of tables with a requested structure profile.

Cells are assigned in row-major order; candidate subsets are enumerated
by increasing popcount then numeric value, with a seeded shuffle inside
each popcount class.  Propagation keeps row/column unions completable
whenever the requested profile implies reproduction, and pins the
identity row and column to singletons when it implies a strict identity.
Every emitted structure is re-checked through the full classifier before
it is returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .axioms import StructureProfile, classify
from .core import HyperTable, StructureBundle, derive_divisions
from .errors import InputError

# Flags whose truth forces full reproduction / a pinned strict identity.
_NEEDS_REPRODUCTION = frozenset({
    "quasihypergroup", "hypergroup", "hv_group", "polyquasigroup",
    "polyloop", "multiloop", "associative_polyloop", "polygroup",
    "geometric_hyperquasigroup", "tallini2",
})
_NEEDS_STRICT_IDENTITY = frozenset({"polyloop", "associative_polyloop", "polygroup"})


@dataclass(frozen=True)
class SearchSpec:
    order: int
    require: dict[str, bool] = field(default_factory=dict)
    cell_size_max: int | None = None
    seed: int = 0
    node_budget: int = 100_000
    count: int = 1

    def __post_init__(self):
        if not (1 <= self.order <= 8):
            raise InputError("search supports orders 1 through 8")
        if self.cell_size_max is not None and self.cell_size_max < 1:
            raise InputError("cell_size_max must be at least 1")
        if self.node_budget <= 0 or self.count < 1:
            raise InputError("node_budget and count must be positive")
        for flag in self.require:
            if flag not in StructureProfile.FLAG_NAMES:
                raise InputError(f"unknown profile flag {flag!r}")


def search_structures(spec: SearchSpec) -> list[StructureBundle]:
    """Up to ``count`` bundles matching the required flags, deterministically.

    Returns fewer (possibly none) when the node budget exhausts the
    reachable space first.
    """
    n = spec.order
    full = (1 << n) - 1
    cell_max = spec.cell_size_max or n
    need_repro = any(spec.require.get(f) for f in _NEEDS_REPRODUCTION)
    pin_identity = any(spec.require.get(f) for f in _NEEDS_STRICT_IDENTITY)

    cells: list[list[int | None]] = [[None] * n for _ in range(n)]
    if pin_identity:
        # fix the identity at index 0; cheap isomorph rejection
        for j in range(n):
            cells[0][j] = 1 << j
            cells[j][0] = 1 << j
    free = [(i, j) for i in range(n) for j in range(n) if cells[i][j] is None]

    by_popcount: dict[int, list[int]] = {}
    for m in range(1, full + 1):
        p = m.bit_count()
        if p <= cell_max:
            by_popcount.setdefault(p, []).append(m)
    candidates: list[list[int]] = []
    for k in range(len(free)):
        rng = random.Random(spec.seed * 0x9E3779B1 + k)
        ordered: list[int] = []
        for p in sorted(by_popcount):
            block = list(by_popcount[p])
            rng.shuffle(block)
            ordered.extend(block)
        candidates.append(ordered)

    found: list[StructureBundle] = []
    nodes = 0

    def still_coverable(i: int, j: int) -> bool:
        row_union, row_left = 0, 0
        for jj in range(n):
            c = cells[i][jj]
            if c is None:
                row_left += 1
            else:
                row_union |= c
        if (full & ~row_union).bit_count() > row_left * cell_max:
            return False
        col_union, col_left = 0, 0
        for ii in range(n):
            c = cells[ii][j]
            if c is None:
                col_left += 1
            else:
                col_union |= c
        return (full & ~col_union).bit_count() <= col_left * cell_max

    def accept() -> StructureBundle | None:
        table = HyperTable(tuple(str(i) for i in range(n)),
                           tuple(tuple(row) for row in cells))
        divisions = None
        if need_repro:
            try:
                divisions = derive_divisions(table)
            except InputError:
                return None
        bundle = StructureBundle(
            name=f"search order={n} seed={spec.seed} #{len(found) + 1}",
            table=table,
            divisions=divisions,
            identity=0 if pin_identity else None,
            provenance=f"search seed={spec.seed}",
        )
        try:
            profile = classify(bundle)
        except InputError:
            return None
        flags = profile.flags()
        for name, wanted in spec.require.items():
            if flags[name].holds is not wanted:
                return None
        return bundle

    def descend(k: int) -> None:
        nonlocal nodes
        if len(found) >= spec.count or nodes >= spec.node_budget:
            return
        if k == len(free):
            bundle = accept()
            if bundle is not None:
                found.append(bundle)
            return
        i, j = free[k]
        for m in candidates[k]:
            if len(found) >= spec.count or nodes >= spec.node_budget:
                return
            nodes += 1
            cells[i][j] = m
            if not need_repro or still_coverable(i, j):
                descend(k + 1)
            cells[i][j] = None

    if not free:  # order 1 with pinned identity: the unique table
        bundle = accept()
        return [bundle] if bundle is not None else []
    descend(0)
    return found


def random_hypergroupoid(order: int, density: float, seed: int) -> HyperTable:
    """Seeded random table: each cell holds each element with probability
    ``density``, re-drawing a single member if the cell came out empty."""
    if not (1 <= order <= 64):
        raise InputError("order must be between 1 and 64")
    if not (0 < density <= 1):
        raise InputError("density must be in (0, 1]")
    rng = random.Random(seed)
    rows = []
    for _ in range(order):
        row = []
        for _ in range(order):
            m = 0
            for k in range(order):
                if rng.random() < density:
                    m |= 1 << k
            if m == 0:
                m = 1 << rng.randrange(order)
            row.append(m)
        rows.append(tuple(row))
    return HyperTable(tuple(str(i) for i in range(order)), tuple(rows))
