"""Structure-class predicates with counterexample witnesses.

Every predicate scans exhaustively and deterministically: the witness
reported for a failing axiom is the first one in lexicographic index
order, so verdicts are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DivisionPair, HyperTable, Members, StructureBundle, derive_divisions, iter_bits
from .errors import (
    AmbiguousInverseError,
    InputError,
    InternalCheckError,
    NoInverseError,
)


@dataclass(frozen=True)
class WitnessedBool:
    """Three-valued verdict: holds, fails with a witness, or not determinable.

    ``holds`` is None when required optional data (divisions, identity,
    inverse) is absent and cannot be derived; ``note`` then says why.
    A failed universally quantified axiom always carries a witness tuple
    that replays the failure; existential failures (no identity exists)
    carry an explanatory note instead.
    """

    holds: bool | None
    witness: tuple | None = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.holds is True


_TRUE = WitnessedBool(True)


def check_associativity(table: HyperTable) -> WitnessedBool:
    """a.(b.c) = (a.b).c as sets, for every triple."""
    n = table.order
    for a in range(n):
        arow = table.cells[a]
        for b in range(n):
            ab = arow[b]
            brow = table.cells[b]
            for c in range(n):
                lhs = table.set_product(1 << a, brow[c])
                rhs = table.set_product(ab, 1 << c)
                if lhs != rhs:
                    return WitnessedBool(False, (a, b, c, Members(lhs), Members(rhs)))
    return _TRUE


def check_weak_associativity(table: HyperTable) -> WitnessedBool:
    """The two association orders intersect for every triple (WASS)."""
    n = table.order
    for a in range(n):
        for b in range(n):
            ab = table.cells[a][b]
            for c in range(n):
                lhs = table.set_product(1 << a, table.cells[b][c])
                rhs = table.set_product(ab, 1 << c)
                if not lhs & rhs:
                    return WitnessedBool(False, (a, b, c, Members(lhs), Members(rhs)))
    return _TRUE


def check_reproduction(table: HyperTable) -> WitnessedBool:
    """Every row union and column union equals the full carrier."""
    full = table.full_mask
    for x in range(table.order):
        ru = table.row_union(x)
        if ru != full:
            return WitnessedBool(False, (x, "row", Members(full & ~ru)))
        cu = table.col_union(x)
        if cu != full:
            return WitnessedBool(False, (x, "column", Members(full & ~cu)))
    return _TRUE


def check_commutativity(table: HyperTable) -> WitnessedBool:
    n = table.order
    for x in range(n):
        for y in range(x + 1, n):
            if table.cells[x][y] != table.cells[y][x]:
                return WitnessedBool(False, (x, y, Members(table.cells[x][y]), Members(table.cells[y][x])))
    return _TRUE


def check_polyquasigroup(table: HyperTable, divisions: DivisionPair) -> WitnessedBool:
    """The four division membership conditions, for every pair (x, y):

    (i) x in (x.y)/y   (ii) x in (x/y).y   (iii) x in y\\(y.x)   (iv) x in y.(y\\x)

    Compound expressions extend to sets by union; the witness names the
    first violated condition in the order (i)..(iv) per pair.
    """
    if divisions.left.names != table.names:
        raise InputError("division tables disagree with the base table carrier")
    ldiv, rdiv = divisions.left, divisions.right
    n = table.order
    for x in range(n):
        xbit = 1 << x
        for y in range(n):
            ybit = 1 << y
            if not rdiv.set_product(table.cells[x][y], ybit) & xbit:
                return WitnessedBool(False, ("i", x, y))
            if not table.set_product(rdiv.cells[x][y], ybit) & xbit:
                return WitnessedBool(False, ("ii", x, y))
            if not ldiv.set_product(ybit, table.cells[y][x]) & xbit:
                return WitnessedBool(False, ("iii", x, y))
            if not table.set_product(ybit, ldiv.cells[y][x]) & xbit:
                return WitnessedBool(False, ("iv", x, y))
    return _TRUE


@dataclass(frozen=True)
class IdentityScan:
    """Strict identity (x.e = e.x = {x}) and weak identities (x in x.e = e.x)."""

    strict: int | None
    weak: tuple[int, ...]


def check_identity(table: HyperTable) -> IdentityScan:
    n = table.order
    strict: list[int] = []
    weak: list[int] = []
    for e in range(n):
        is_strict = True
        is_weak = True
        for x in range(n):
            xe, ex = table.cells[x][e], table.cells[e][x]
            if xe != ex or not (xe >> x) & 1:
                is_weak = False
                is_strict = False
                break
            if xe != 1 << x:
                is_strict = False
        if is_weak:
            weak.append(e)
        if is_strict:
            strict.append(e)
    if len(strict) > 1:
        # impossible: {e} = e.f = {f} would identify the two
        raise InternalCheckError(f"two strict identities found: {strict}")
    return IdentityScan(strict[0] if strict else None, tuple(weak))


def derive_inverse(table: HyperTable, e: int) -> tuple[int, ...]:
    """For each x, the unique y with e in x.y and e in y.x."""
    n = table.order
    ebit = 1 << e
    inv = []
    for x in range(n):
        cands = tuple(
            y for y in range(n)
            if table.cells[x][y] & ebit and table.cells[y][x] & ebit
        )
        if not cands:
            raise NoInverseError(x, table.names[x])
        if len(cands) > 1:
            raise AmbiguousInverseError(x, table.names[x], cands)
        inv.append(cands[0])
    return tuple(inv)


def check_polygroup(table: HyperTable, e: int, inverse: tuple[int, ...]) -> WitnessedBool:
    """Associativity, strict identity at e, and reversibility:

    x in y.z  implies  y in x.z' and z in y'.x  (with ' the given inverse).
    """
    n = table.order
    if not (0 <= e < n) or len(inverse) != n:
        raise InputError("identity or inverse map does not fit the carrier")
    assoc = check_associativity(table)
    if not assoc:
        return WitnessedBool(False, assoc.witness, "associativity fails")
    for x in range(n):
        if table.cells[x][e] != 1 << x or table.cells[e][x] != 1 << x:
            return WitnessedBool(False, (x, e), "identity is not strict")
    for y in range(n):
        for z in range(n):
            for x in iter_bits(table.cells[y][z]):
                if not (table.cells[x][inverse[z]] >> y) & 1:
                    return WitnessedBool(False, (x, y, z), "reversibility fails on the right")
                if not (table.cells[inverse[y]][x] >> z) & 1:
                    return WitnessedBool(False, (x, y, z), "reversibility fails on the left")
    return _TRUE


@dataclass(frozen=True)
class TalliniFlags:
    tallini1: WitnessedBool
    tallini2: WitnessedBool
    tallini3: WitnessedBool
    tallini4: WitnessedBool
    tallini5: WitnessedBool
    geometric: WitnessedBool


def check_tallini(table: HyperTable) -> TalliniFlags:
    """The five diagonal/containment axioms, each read literally.

    1: h.h = {h};  2: {h1, h2} subset of h1.h2;  3: h1.h2 subset of g1.g2
    for all pairs and all g1 != g2;  4: for h3 in h1.h2 both association
    orders equal h1.h2;  5: h1.h2 = g1.g2 for all pairs and all g1 != g2.
    A geometric hyperquasigroup is 1 and 2 and 3 on a reproductive table.
    """
    n = table.order
    t1 = _TRUE
    for h in range(n):
        if table.cells[h][h] != 1 << h:
            t1 = WitnessedBool(False, (h, Members(table.cells[h][h])))
            break
    t2 = _TRUE
    for h1 in range(n):
        for h2 in range(n):
            want = (1 << h1) | (1 << h2)
            if table.cells[h1][h2] & want != want:
                t2 = WitnessedBool(False, (h1, h2, Members(table.cells[h1][h2])))
                break
        if not t2:
            break
    t3 = _tallini_pairwise(table, subset=True)
    t5 = _tallini_pairwise(table, subset=False)
    t4 = _TRUE
    for h1 in range(n):
        for h2 in range(n):
            prod = table.cells[h1][h2]
            for h3 in iter_bits(prod):
                lhs = table.set_product(1 << h1, table.cells[h2][h3])
                rhs = table.set_product(prod, 1 << h3)
                if lhs != prod or rhs != prod:
                    t4 = WitnessedBool(False, (h1, h2, h3, Members(lhs), Members(rhs)))
                    break
            if not t4:
                break
        if not t4:
            break
    repro = check_reproduction(table)
    if t1 and t2 and t3 and repro:
        geo = _TRUE
    else:
        first = next(f for f in (t1, t2, t3, repro) if not f)
        geo = WitnessedBool(False, first.witness)
    return TalliniFlags(t1, t2, t3, t4, t5, geo)


def _tallini_pairwise(table: HyperTable, subset: bool) -> WitnessedBool:
    n = table.order
    for h1 in range(n):
        for h2 in range(n):
            prod = table.cells[h1][h2]
            for g1 in range(n):
                for g2 in range(n):
                    if g1 == g2:
                        continue
                    other = table.cells[g1][g2]
                    bad = (prod & ~other) if subset else (prod != other)
                    if bad:
                        return WitnessedBool(False, (h1, h2, g1, g2, Members(prod), Members(other)))
    return _TRUE


@dataclass(frozen=True)
class StructureProfile:
    """One verdict per structure class, plus identity/inverse data."""

    hypergroupoid: WitnessedBool
    semihypergroup: WitnessedBool
    quasihypergroup: WitnessedBool
    hypergroup: WitnessedBool
    hv_group: WitnessedBool
    polyquasigroup: WitnessedBool
    polyloop: WitnessedBool
    multiloop: WitnessedBool
    associative_polyloop: WitnessedBool
    polygroup: WitnessedBool
    tallini1: WitnessedBool
    tallini2: WitnessedBool
    tallini3: WitnessedBool
    tallini4: WitnessedBool
    tallini5: WitnessedBool
    geometric_hyperquasigroup: WitnessedBool
    commutative: WitnessedBool
    identity: int | None = None
    weak_identities: tuple[int, ...] = ()
    inverse: tuple[int, ...] | None = None

    FLAG_NAMES = (
        "hypergroupoid", "semihypergroup", "quasihypergroup", "hypergroup",
        "hv_group", "polyquasigroup", "polyloop", "multiloop",
        "associative_polyloop", "polygroup", "tallini1", "tallini2",
        "tallini3", "tallini4", "tallini5", "geometric_hyperquasigroup",
        "commutative",
    )

    def flags(self) -> dict[str, WitnessedBool]:
        return {name: getattr(self, name) for name in self.FLAG_NAMES}


def _conjunction(*parts: WitnessedBool) -> WitnessedBool:
    """All-of verdict: first failure wins, indeterminate only if nothing fails."""
    for p in parts:
        if p.holds is False:
            return p
    for p in parts:
        if p.holds is None:
            return p
    return _TRUE


def classify(bundle: StructureBundle) -> StructureProfile:
    """Compute every structure flag for a bundle.

    Flags whose optional data (divisions, identity, inverse) is absent
    are computed from canonically derived data where that exists;
    otherwise they come back indeterminate rather than false.
    """
    table = bundle.table
    semi = check_associativity(table)
    quasi = check_reproduction(table)
    wass = check_weak_associativity(table) if not semi else _TRUE
    hyper = _conjunction(semi, quasi)
    hv = _conjunction(quasi, wass)
    comm = check_commutativity(table)
    tal = check_tallini(table)

    divisions = bundle.divisions
    derived_note = ""
    if divisions is None:
        if quasi:
            divisions = derive_divisions(table)
            derived_note = "divisions derived canonically"
    if divisions is not None:
        pq = check_polyquasigroup(table, divisions)
        if pq.holds and derived_note:
            pq = WitnessedBool(True, note=derived_note)
    else:
        pq = WitnessedBool(False, quasi.witness,
                           "reproduction fails, so no division tables exist")

    idscan = check_identity(table)
    strict = idscan.strict
    if bundle.identity is not None and bundle.identity != strict:
        raise InputError(
            f"declared identity {table.names[bundle.identity]!r} is not the strict identity"
        )
    if pq.holds:
        polyloop = pq if strict is not None else WitnessedBool(False, None, "no strict identity")
        multiloop = pq if idscan.weak else WitnessedBool(False, None, "no weak identity")
    else:
        polyloop = pq
        multiloop = pq
    assoc_polyloop = _conjunction(polyloop, semi)

    inverse = bundle.inverse
    polygroup: WitnessedBool
    if not semi:
        polygroup = WitnessedBool(False, semi.witness, "associativity fails")
    elif strict is None:
        polygroup = WitnessedBool(False, None, "no strict identity")
    else:
        if inverse is None:
            try:
                inverse = derive_inverse(table, strict)
            except NoInverseError as exc:
                polygroup = WitnessedBool(False, (exc.x,), "an element has no inverse candidate")
                inverse = None
            except AmbiguousInverseError as exc:
                polygroup = WitnessedBool(
                    None, note=f"not determinable: missing input ({exc})")
                inverse = None
        if inverse is not None:
            polygroup = check_polygroup(table, strict, inverse)

    return StructureProfile(
        hypergroupoid=_TRUE,
        semihypergroup=semi,
        quasihypergroup=quasi,
        hypergroup=hyper,
        hv_group=hv,
        polyquasigroup=pq,
        polyloop=polyloop,
        multiloop=multiloop,
        associative_polyloop=assoc_polyloop,
        polygroup=polygroup,
        tallini1=tal.tallini1,
        tallini2=tal.tallini2,
        tallini3=tal.tallini3,
        tallini4=tal.tallini4,
        tallini5=tal.tallini5,
        geometric_hyperquasigroup=tal.geometric,
        commutative=comm,
        identity=strict,
        weak_identities=idscan.weak,
        inverse=inverse,
    )
