"""Classical groups and the hyperstructures built from them.

Three constructions: singleton import of a Cayley table, the coset
quotient (carrier = left cosets, product = cosets meeting the setwise
product), and the double-coset algebra (a canonical polygroup).  Group
input is validated exhaustively rather than trusted; the builders here
(cyclic, dihedral, symmetric, quaternion, direct products) exist mainly
to feed tests and the CLI.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import HyperTable, StructureBundle, derive_divisions, iter_bits, mask_of
from .errors import InputError, InvalidGroupError, NotSubgroupError


@dataclass(frozen=True)
class GroupTable:
    """A finite group: Cayley table on indices, identity, inverse map."""

    names: tuple[str, ...]
    cayley: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.names)

    def mult(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    @classmethod
    def from_cayley(cls, names, cayley) -> "GroupTable":
        """Validate the group axioms exhaustively and locate e and inverses."""
        names = tuple(names)
        n = len(names)
        cayley = tuple(tuple(row) for row in cayley)
        if n > 64:
            raise InvalidGroupError("carriers above 64 elements are not supported")
        if len(set(names)) != n:
            raise InvalidGroupError("carrier names are not distinct")
        if len(cayley) != n or any(len(row) != n for row in cayley):
            raise InvalidGroupError("table is not square")
        for i, row in enumerate(cayley):
            if any(not (0 <= v < n) for v in row):
                raise InvalidGroupError(f"row {i} has an out-of-range entry")
            if len(set(row)) != n:
                raise InvalidGroupError("a row repeats an element", (i,))
        for j in range(n):
            col = {cayley[i][j] for i in range(n)}
            if len(col) != n:
                raise InvalidGroupError("a column repeats an element", (j,))
        for a in range(n):
            for b in range(n):
                ab = cayley[a][b]
                for c in range(n):
                    if cayley[ab][c] != cayley[a][cayley[b][c]]:
                        raise InvalidGroupError("associativity fails", (a, b, c))
        identity = None
        for e in range(n):
            if all(cayley[e][x] == x and cayley[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise InvalidGroupError("no identity element")
        inverse = []
        for x in range(n):
            inv = next((y for y in range(n)
                        if cayley[x][y] == identity and cayley[y][x] == identity), None)
            if inv is None:
                raise InvalidGroupError("no inverse", (x,))
            inverse.append(inv)
        return cls(names, cayley, identity, tuple(inverse))


def cyclic_group(n: int) -> GroupTable:
    names = tuple(str(i) for i in range(n))
    cayley = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return GroupTable.from_cayley(names, cayley)


def symmetric_group(n: int) -> GroupTable:
    """Permutations of {1..n} named in cycle notation, composed left-then-
    right applied as (p*q)(x) = p(q(x))."""
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    def compose(p, q):
        return tuple(p[q[x]] for x in range(n))
    cayley = tuple(tuple(index[compose(p, q)] for q in perms) for p in perms)
    return GroupTable.from_cayley(tuple(_cycle_name(p) for p in perms), cayley)


def _cycle_name(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = perm[x]
        parts.append("(" + " ".join(str(i + 1) for i in cyc) + ")")
    return "".join(parts) if parts else "e"


def dihedral_group(k: int) -> GroupTable:
    """Symmetries of a regular k-gon, order 2k: r^i and s r^i."""
    if k < 1:
        raise InputError("dihedral index must be positive")
    names = tuple([f"r{i}" for i in range(k)] + [f"sr{i}" for i in range(k)])
    def mult(a, b):
        fa, ia = divmod(a, k)
        fb, ib = divmod(b, k)
        # (s^fa r^ia)(s^fb r^ib) = s^(fa+fb) r^(ib +/- ia)
        i = (ib + ia) % k if fb == 0 else (ib - ia) % k
        return ((fa + fb) % 2) * k + i
    cayley = tuple(tuple(mult(a, b) for b in range(2 * k)) for a in range(2 * k))
    return GroupTable.from_cayley(names, cayley)


def quaternion_group() -> GroupTable:
    names = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    # sign-and-axis multiplication of unit quaternions
    def mult(a, b):
        sa, xa = divmod(a, 2)[1], a // 2  # sign bit, axis index (0:1, 1:i, 2:j, 3:k)
        sb, xb = divmod(b, 2)[1], b // 2
        table = {
            (0, 0): (0, 0), (0, 1): (1, 0), (0, 2): (2, 0), (0, 3): (3, 0),
            (1, 0): (1, 0), (1, 1): (0, 1), (1, 2): (3, 0), (1, 3): (2, 1),
            (2, 0): (2, 0), (2, 1): (3, 1), (2, 2): (0, 1), (2, 3): (1, 0),
            (3, 0): (3, 0), (3, 1): (2, 0), (3, 2): (1, 1), (3, 3): (0, 1),
        }
        axis, neg = table[(xa, xb)]
        sign = (sa + sb + neg) % 2
        return axis * 2 + sign
    cayley = tuple(tuple(mult(a, b) for b in range(8)) for a in range(8))
    return GroupTable.from_cayley(names, cayley)


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    pairs = [(a, b) for a in range(g.order) for b in range(h.order)]
    index = {p: i for i, p in enumerate(pairs)}
    names = tuple(f"({g.names[a]},{h.names[b]})" for a, b in pairs)
    cayley = tuple(
        tuple(index[(g.mult(a, c), h.mult(b, d))] for (c, d) in pairs)
        for (a, b) in pairs
    )
    return GroupTable.from_cayley(names, cayley)


def small_group_catalog(max_order: int) -> list[tuple[str, GroupTable]]:
    """One representative per isomorphism class of order <= max_order (<= 8)."""
    if max_order > 8:
        raise InputError("catalog covers orders up to 8")
    out: list[tuple[str, GroupTable]] = []
    c2 = cyclic_group(2)
    for n in range(1, max_order + 1):
        out.append((f"C{n}", cyclic_group(n)))
        if n == 4:
            out.append(("C2xC2", direct_product(c2, c2)))
        if n == 6:
            out.append(("S3", symmetric_group(3)))
        if n == 8:
            out.append(("C4xC2", direct_product(cyclic_group(4), c2)))
            out.append(("C2xC2xC2", direct_product(direct_product(c2, c2), c2)))
            out.append(("D4", dihedral_group(4)))
            out.append(("Q8", quaternion_group()))
    return out


def subgroup_mask(g: GroupTable, labels) -> int:
    """Resolve member labels to a mask and verify the subgroup axioms."""
    mask = 0
    for lb in labels:
        try:
            mask |= 1 << g.names.index(lb)
        except ValueError:
            raise NotSubgroupError(f"unknown element {lb!r}") from None
    check_subgroup(g, mask)
    return mask


def check_subgroup(g: GroupTable, mask: int) -> None:
    if mask == 0:
        raise NotSubgroupError("a subgroup cannot be empty")
    if not (mask >> g.identity) & 1:
        raise NotSubgroupError("identity is missing")
    members = list(iter_bits(mask))
    for a in members:
        if not (mask >> g.inverse[a]) & 1:
            raise NotSubgroupError("not closed under inverse", (g.names[a],))
        for b in members:
            if not (mask >> g.mult(a, b)) & 1:
                raise NotSubgroupError(
                    "not closed under the product",
                    (g.names[a], g.names[b], g.names[g.mult(a, b)]))


def all_subgroups(g: GroupTable) -> list[int]:
    """Every subgroup as a member mask, by closure of subset generators."""
    n = g.order
    found = {1 << g.identity}
    frontier = [1 << g.identity]
    while frontier:
        base = frontier.pop()
        for x in range(n):
            if (base >> x) & 1:
                continue
            closed = _closure(g, base | (1 << x))
            if closed not in found:
                found.add(closed)
                frontier.append(closed)
    return sorted(found)


def _closure(g: GroupTable, mask: int) -> int:
    while True:
        new = mask
        members = list(iter_bits(mask))
        for a in members:
            new |= 1 << g.inverse[a]
            for b in members:
                new |= 1 << g.mult(a, b)
        if new == mask:
            return mask
        mask = new


def from_cayley_table(g: GroupTable) -> HyperTable:
    """Embed a group as the all-singleton hyperoperation table."""
    cells = tuple(tuple(1 << v for v in row) for row in g.cayley)
    return HyperTable(g.names, cells)


def _setwise_product(g: GroupTable, left: int, right: int) -> int:
    out = 0
    for a in iter_bits(left):
        row = g.cayley[a]
        for b in iter_bits(right):
            out |= 1 << row[b]
    return out


def quotient_hypergroup(g: GroupTable, subgroup: int) -> HyperTable:
    """Carrier = left cosets xH; the product of two cosets is the set of
    cosets meeting their setwise product.  Always a hypergroup."""
    check_subgroup(g, subgroup)
    cosets = _left_cosets(g, subgroup)
    coset_of = {}
    for ci, mask in enumerate(cosets):
        for x in iter_bits(mask):
            coset_of[x] = ci
    names = tuple(f"{g.names[next(iter_bits(mask))]}H" for mask in cosets)
    cells = []
    for a in cosets:
        row = []
        for b in cosets:
            prod = _setwise_product(g, a, b)
            row.append(mask_of({coset_of[x] for x in iter_bits(prod)}))
        cells.append(tuple(row))
    return HyperTable(names, tuple(cells))


def _left_cosets(g: GroupTable, subgroup: int) -> list[int]:
    """Left cosets xH ordered by their minimal member's index."""
    seen = 0
    cosets = []
    for x in range(g.order):
        if (seen >> x) & 1:
            continue
        coset = _setwise_product(g, 1 << x, subgroup)
        cosets.append(coset)
        seen |= coset
    return cosets


def double_coset_algebra(g: GroupTable, subgroup: int) -> StructureBundle:
    """The double-coset polygroup: carrier = cosets HgH, with

        (Hg1H) * (Hg2H) = { H g1 h g2 H : h in H },

    identity the coset H, and inverse (HgH) -> H g^-1 H.
    """
    check_subgroup(g, subgroup)
    seen = 0
    cosets = []
    for x in range(g.order):
        if (seen >> x) & 1:
            continue
        coset = _setwise_product(g, _setwise_product(g, subgroup, 1 << x), subgroup)
        cosets.append(coset)
        seen |= coset
    coset_of = {}
    for ci, mask in enumerate(cosets):
        for x in iter_bits(mask):
            coset_of[x] = ci
    names = tuple(f"H{g.names[next(iter_bits(mask))]}H" for mask in cosets)
    cells = []
    for a in cosets:
        g1 = next(iter_bits(a))
        row = []
        for b in cosets:
            g2 = next(iter_bits(b))
            members = 0
            for h in iter_bits(subgroup):
                members |= 1 << coset_of[g.mult(g.mult(g1, h), g2)]
            row.append(members)
        cells.append(tuple(row))
    table = HyperTable(names, tuple(cells))
    identity = coset_of[g.identity]
    inverse = tuple(coset_of[g.inverse[next(iter_bits(c))]] for c in cosets)
    return StructureBundle(
        name=f"double cosets by {{{', '.join(g.names[i] for i in iter_bits(subgroup))}}}",
        table=table,
        divisions=derive_divisions(table),
        identity=identity,
        inverse=inverse,
        provenance="double-coset construction",
    )
