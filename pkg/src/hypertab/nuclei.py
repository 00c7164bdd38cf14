"""Nuclei of hyperoperation tables, four orders by three sides.

For order 1 the defining equality quantifies over carrier elements; for
orders 2..4 one or both positions quantify over non-empty subsets.  Under
the union extension of the hyperoperation the subset-quantified
conditions reduce to the element-quantified ones (instantiate subsets as
singletons one way; expand products union-linearly the other), so the
default path answers every order with the element scan.  An independent
brute-force oracle enumerates the powerset literally and is used to
cross-check that reduction and to machine-verify the fifteen containments
between the orders.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import HyperTable, iter_bits
from .errors import BudgetExceededError, InternalCheckError, NotClassicalError

SIDES = ("left", "middle", "right")
ORDERS = (1, 2, 3, 4)

# Containments that provably hold between nucleus orders: (lower, upper).
CONTAINMENT_PAIRS = ((1, 2), (1, 3), (1, 4), (2, 4), (3, 4))

DEFAULT_SUBSET_CAP = 6


def _check_args(order: int, side: str) -> None:
    if order not in ORDERS:
        raise ValueError(f"nucleus order must be in {ORDERS}, got {order}")
    if side not in SIDES:
        raise ValueError(f"nucleus side must be in {SIDES}, got {side!r}")


def first_nucleus(table: HyperTable, side: str) -> int:
    """Elements a for which the side's associativity equation holds
    with both remaining arguments ranging over carrier elements."""
    n = table.order
    cells = table.cells
    out = 0
    for a in range(n):
        abit = 1 << a
        ok = True
        if side == "left":
            # a.(x.y) = (a.x).y
            for x in range(n):
                ax = cells[a][x]
                xrow = cells[x]
                for y in range(n):
                    if table.set_product(abit, xrow[y]) != table.set_product(ax, 1 << y):
                        ok = False
                        break
                if not ok:
                    break
        elif side == "middle":
            # (x.a).y = x.(a.y)
            for x in range(n):
                xa = cells[x][a]
                xbit = 1 << x
                for y in range(n):
                    if table.set_product(xa, 1 << y) != table.set_product(xbit, cells[a][y]):
                        ok = False
                        break
                if not ok:
                    break
        else:
            # (x.y).a = x.(y.a)
            for x in range(n):
                xbit = 1 << x
                xrow = cells[x]
                for y in range(n):
                    if table.set_product(xrow[y], abit) != table.set_product(xbit, cells[y][a]):
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            out |= abit
    return out


def nucleus(table: HyperTable, order: int, side: str) -> int:
    """Nucleus of the given order and side, as an element mask.

    Orders 2..4 use the singleton reduction described in the module
    docstring; ``nucleus_bruteforce`` checks the same sets against the
    literal subset quantifiers.
    """
    _check_args(order, side)
    return first_nucleus(table, side)


def nucleus_intersection(table: HyperTable, order: int) -> int:
    """Intersection of the three side nuclei at one order."""
    out = table.full_mask
    for side in SIDES:
        out &= nucleus(table, order, side)
    return out


class SubsetProducts:
    """Memoized literal set products over all non-empty subset pairs.

    ``prod[A][B]`` is computed straight from the definition (union of
    cells over members of A and B), so lookups feed the brute-force
    oracle without borrowing the singleton reduction it is checking.
    """

    def __init__(self, table: HyperTable):
        n = table.order
        full = table.full_mask
        cells = table.cells
        prod = [[0] * (full + 1) for _ in range(full + 1)]
        for A in range(1, full + 1):
            rowA = prod[A]
            members_a = list(iter_bits(A))
            for B in range(1, full + 1):
                out = 0
                for a in members_a:
                    row = cells[a]
                    for b in iter_bits(B):
                        out |= row[b]
                rowA[B] = out
        self.prod = prod
        self.full = full
        self.n = n


def _subset_pairs(order: int, side_n: int, full: int):
    """Quantifier ranges for the literal conditions: (X, Y) mask pairs."""
    subsets = range(1, full + 1)
    singles = [1 << i for i in range(side_n)]
    if order == 2:
        return ((X, y) for X in subsets for y in singles)
    if order == 3:
        return ((x, Y) for Y in subsets for x in singles)
    return ((X, Y) for X in subsets for Y in subsets)


def nucleus_bruteforce(table: HyperTable, order: int, side: str,
                       subset_cap: int = DEFAULT_SUBSET_CAP,
                       products: SubsetProducts | None = None) -> int:
    """Literal powerset evaluation of the defining equality.

    Enumerates every non-empty subset for each subset-valued quantifier
    (the empty set satisfies the equalities vacuously and is skipped).
    Exponential: refuses tables larger than ``subset_cap``.
    """
    _check_args(order, side)
    if order == 1:
        return first_nucleus(table, side)
    n = table.order
    if n > subset_cap:
        raise BudgetExceededError(
            f"brute-force oracle capped at order {subset_cap}; table has order {n}")
    sp = products if products is not None else SubsetProducts(table)
    prod = sp.prod
    full = table.full_mask
    out = 0
    for a in range(n):
        abit = 1 << a
        ok = True
        if side == "left":
            for X, Y in _subset_pairs(order, n, full):
                if prod[abit][prod[X][Y]] != prod[prod[abit][X]][Y]:
                    ok = False
                    break
        elif side == "middle":
            for X, Y in _subset_pairs(order, n, full):
                if prod[prod[X][abit]][Y] != prod[X][prod[abit][Y]]:
                    ok = False
                    break
        else:
            for X, Y in _subset_pairs(order, n, full):
                if prod[prod[X][Y]][abit] != prod[X][prod[Y][abit]]:
                    ok = False
                    break
        if ok:
            out |= abit
    return out


def classical_nuclei(table: HyperTable) -> tuple[int, int, int]:
    """Left, middle, right nuclei of an all-singleton table, computed
    classically on elements.  Must coincide with the order-1 nuclei."""
    n = table.order
    op = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cell = table.cells[i][j]
            if cell & (cell - 1):
                raise NotClassicalError(i, j)
            op[i][j] = cell.bit_length() - 1
    def scan(which: str) -> int:
        out = 0
        for a in range(n):
            if which == "left":
                ok = all(op[a][op[x][y]] == op[op[a][x]][y] for x in range(n) for y in range(n))
            elif which == "middle":
                ok = all(op[op[x][a]][y] == op[x][op[a][y]] for x in range(n) for y in range(n))
            else:
                ok = all(op[op[x][y]][a] == op[x][op[y][a]] for x in range(n) for y in range(n))
            if ok:
                out |= 1 << a
        return out
    return scan("left"), scan("middle"), scan("right")


@dataclass(frozen=True)
class NucleusEntry:
    order: int
    side: str
    members: int
    method: str  # "fast-path" | "brute-force"
    seconds: float


@dataclass(frozen=True)
class NucleusReport:
    """All twelve side nuclei plus the four order intersections."""

    table: HyperTable
    entries: tuple[NucleusEntry, ...]
    intersections: dict[int, int]

    def members(self, order: int, side: str) -> int:
        for e in self.entries:
            if e.order == order and e.side == side:
                return e.members
        raise KeyError((order, side))

    def check_internal_consistency(self) -> None:
        """Intersections really are intersections, and the proven
        containments between orders hold within the report."""
        for order in self.intersections:
            expect = self.table.full_mask
            for side in SIDES:
                expect &= self.members(order, side)
            if expect != self.intersections[order]:
                raise InternalCheckError(f"intersection mismatch at order {order}")
        present = {(e.order, e.side): e.members for e in self.entries}
        for lo, hi in CONTAINMENT_PAIRS:
            for side in SIDES:
                if (lo, side) in present and (hi, side) in present:
                    if present[(lo, side)] & ~present[(hi, side)]:
                        raise InternalCheckError(
                            f"order-{lo} {side} nucleus exceeds order-{hi}")
            if lo in self.intersections and hi in self.intersections:
                if self.intersections[lo] & ~self.intersections[hi]:
                    raise InternalCheckError(
                        f"order-{lo} intersection exceeds order-{hi}")


def compute_nucleus_report(table: HyperTable, orders=ORDERS, brute: bool = False,
                           subset_cap: int = DEFAULT_SUBSET_CAP) -> NucleusReport:
    """Twelve nucleus sets with per-entry method and timing.

    With ``brute`` the subset-quantified orders run the literal oracle
    (subject to the cap); order 1 is always the element scan.
    """
    products = None
    if brute and any(o > 1 for o in orders):
        if table.order > subset_cap:
            raise BudgetExceededError(
                f"brute-force oracle capped at order {subset_cap}; table has order {table.order}")
        products = SubsetProducts(table)
    entries = []
    by_key: dict[tuple[int, str], int] = {}
    for order in orders:
        for side in SIDES:
            t0 = time.perf_counter()
            if brute and order > 1:
                members = nucleus_bruteforce(table, order, side, subset_cap, products)
                method = "brute-force"
            else:
                members = nucleus(table, order, side)
                method = "fast-path"
            entries.append(NucleusEntry(order, side, members, method, time.perf_counter() - t0))
            by_key[(order, side)] = members
    intersections = {}
    for order in orders:
        inter = table.full_mask
        for side in SIDES:
            inter &= by_key[(order, side)]
        intersections[order] = inter
    report = NucleusReport(table, tuple(entries), intersections)
    report.check_internal_consistency()
    return report


@dataclass(frozen=True)
class ClauseVerdict:
    """One containment check between two nucleus orders of one family."""

    family: str  # a side, or "intersection"
    lower: int
    upper: int
    holds: bool
    lhs: int
    rhs: int

    @property
    def label(self) -> str:
        fam = self.family if self.family == "intersection" else f"{self.family} side"
        return f"order-{self.lower} {fam} within order-{self.upper}"


@dataclass(frozen=True)
class TheoremReport:
    clauses: tuple[ClauseVerdict, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.clauses)

    def failures(self) -> list[ClauseVerdict]:
        return [c for c in self.clauses if not c.holds]


def verify_containment_theorems(table: HyperTable, mode: str = "fast",
                                subset_cap: int = DEFAULT_SUBSET_CAP) -> TheoremReport:
    """Check all twenty containment clauses on a concrete table.

    The containments are proven for every table, so a failing clause is
    an implementation defect; callers should treat it as an internal
    consistency failure, not a mathematical finding.
    """
    if mode not in ("fast", "brute"):
        raise ValueError(f"mode must be 'fast' or 'brute', got {mode!r}")
    brute = mode == "brute"
    products = None
    if brute:
        if table.order > subset_cap:
            raise BudgetExceededError(
                f"brute-force oracle capped at order {subset_cap}; table has order {table.order}")
        products = SubsetProducts(table)

    element_scan = {s: first_nucleus(table, s) for s in SIDES}

    def compute(order: int, side: str) -> int:
        if brute and order > 1:
            return nucleus_bruteforce(table, order, side, subset_cap, products)
        return element_scan[side]

    sets = {(o, s): compute(o, s) for o in ORDERS for s in SIDES}
    inters = {o: sets[(o, "left")] & sets[(o, "middle")] & sets[(o, "right")] for o in ORDERS}
    clauses = []
    for side in SIDES:
        for lo, hi in CONTAINMENT_PAIRS:
            lhs, rhs = sets[(lo, side)], sets[(hi, side)]
            clauses.append(ClauseVerdict(side, lo, hi, lhs & ~rhs == 0, lhs, rhs))
    for lo, hi in CONTAINMENT_PAIRS:
        lhs, rhs = inters[lo], inters[hi]
        clauses.append(ClauseVerdict("intersection", lo, hi, lhs & ~rhs == 0, lhs, rhs))
    return TheoremReport(tuple(clauses))
