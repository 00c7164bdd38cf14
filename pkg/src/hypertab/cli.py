"""Command line interface.

Subcommands: classify, nuclei, verify, construct, search, fixtures,
report.  Exit codes: 0 success, 1 input error, 2 internal invariant
violation (a proven containment failing, or a fixture regression).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codec, fixtures as fixtures_mod, groups, report as report_mod
from .axioms import StructureProfile, classify
from .core import StructureBundle
from .errors import InputError, InternalCheckError
from .nuclei import (
    DEFAULT_SUBSET_CAP,
    ORDERS,
    SIDES,
    NucleusReport,
    TheoremReport,
    compute_nucleus_report,
    nucleus_bruteforce,
    verify_containment_theorems,
)
from .search import SearchSpec, search_structures


def _load_bundle(path: str) -> StructureBundle:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return codec.parse_structure(data)


def _flag_str(flag) -> str:
    return {True: "holds", False: "fails", None: "not determinable"}[flag.holds]


def _profile_obj(bundle: StructureBundle, profile: StructureProfile) -> dict:
    table = bundle.table
    flags = {}
    for name, flag in profile.flags().items():
        entry: dict = {"verdict": _flag_str(flag)}
        if flag.holds is False and flag.witness is not None:
            entry["witness"] = report_mod.witness_text(bundle, flag.witness)
        if flag.note:
            entry["note"] = flag.note
        flags[name] = entry
    obj = {"name": bundle.name, "order": table.order, "flags": flags}
    obj["identity"] = None if profile.identity is None else table.names[profile.identity]
    obj["weak_identities"] = [table.names[i] for i in profile.weak_identities]
    obj["inverse"] = (None if profile.inverse is None else
                      {table.names[i]: table.names[v] for i, v in enumerate(profile.inverse)})
    return obj


def _print_profile(bundle: StructureBundle, profile: StructureProfile) -> None:
    obj = _profile_obj(bundle, profile)
    print(f"structure: {obj['name']} (order {obj['order']})")
    for name, entry in obj["flags"].items():
        line = f"  {name:<26} {entry['verdict']}"
        if "witness" in entry:
            line += f"  witness {entry['witness']}"
        if "note" in entry:
            line += f"  [{entry['note']}]"
        print(line)
    print(f"  identity: {obj['identity'] if obj['identity'] is not None else '-'}")
    if obj["weak_identities"]:
        print(f"  weak identities: {', '.join(obj['weak_identities'])}")
    if obj["inverse"]:
        print("  inverse: " + ", ".join(f"{k}->{v}" for k, v in obj["inverse"].items()))


def cmd_classify(args) -> int:
    bundle = _load_bundle(args.file)
    profile = classify(bundle)
    if args.format == "json":
        print(json.dumps(_profile_obj(bundle, profile), indent=2, ensure_ascii=False))
    else:
        _print_profile(bundle, profile)
    return 0


def _nuclei_obj(bundle: StructureBundle, rep: NucleusReport, timings: bool) -> dict:
    table = bundle.table
    entries = []
    for e in rep.entries:
        entry = {"order": e.order, "side": e.side, "method": e.method,
                 "members": table.labels_of(e.members)}
        if timings:
            entry["seconds"] = e.seconds
        entries.append(entry)
    return {
        "name": bundle.name,
        "order": table.order,
        "nuclei": entries,
        "intersections": {str(o): table.labels_of(m)
                          for o, m in sorted(rep.intersections.items())},
    }


def cmd_nuclei(args) -> int:
    bundle = _load_bundle(args.file)
    try:
        orders = tuple(int(x) for x in args.orders.split(","))
    except ValueError:
        raise InputError(f"orders must be a comma-separated subset of {ORDERS}") from None
    if any(o not in ORDERS for o in orders):
        raise InputError(f"orders must be among {ORDERS}")
    rep = compute_nucleus_report(bundle.table, orders=orders, brute=args.brute,
                                 subset_cap=args.cap)
    if args.format == "json":
        print(json.dumps(_nuclei_obj(bundle, rep, args.timings), indent=2, ensure_ascii=False))
        return 0
    table = bundle.table
    print(f"nuclei of {bundle.name} (order {table.order})")
    for e in rep.entries:
        extra = f"  [{e.seconds * 1000:.2f} ms]" if args.timings else ""
        print(f"  order {e.order} {e.side:<7} {table.format_set(e.members):<30}"
              f" {e.method}{extra}")
    for o, m in sorted(rep.intersections.items()):
        print(f"  order {o} all     {table.format_set(m)}")
    return 0


def _theorem_obj(bundle: StructureBundle, rep: TheoremReport) -> dict:
    table = bundle.table
    return {
        "name": bundle.name,
        "all_hold": rep.all_hold,
        "clauses": [
            {"family": c.family, "lower": c.lower, "upper": c.upper,
             "holds": c.holds,
             "lower_set": table.labels_of(c.lhs),
             "upper_set": table.labels_of(c.rhs)}
            for c in rep.clauses
        ],
    }


def cmd_verify(args) -> int:
    bundle = _load_bundle(args.file)
    rep = verify_containment_theorems(bundle.table, mode="brute" if args.brute else "fast",
                                      subset_cap=args.cap)
    if args.format == "json":
        print(json.dumps(_theorem_obj(bundle, rep), indent=2, ensure_ascii=False))
    else:
        table = bundle.table
        print(f"containment checks for {bundle.name}"
              f" ({'brute-force' if args.brute else 'fast'} sets)")
        for c in rep.clauses:
            mark = "ok  " if c.holds else "FAIL"
            print(f"  {mark} {c.label}: {table.format_set(c.lhs)}"
                  f" within {table.format_set(c.rhs)}")
    if not rep.all_hold:
        print("internal consistency failure: a proven containment does not hold",
              file=sys.stderr)
        return 2
    return 0


def cmd_construct(args) -> int:
    try:
        data = Path(args.group).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {args.group}: {exc}") from None
    group = codec.parse_group(data)
    labels = [s for s in args.subgroup.split(",") if s]
    members = groups.subgroup_mask(group, labels)
    if args.kind == "quotient":
        table = groups.quotient_hypergroup(group, members)
        bundle = StructureBundle(name=f"quotient by {{{', '.join(labels)}}}", table=table,
                                 provenance="coset quotient construction")
    else:
        bundle = groups.double_coset_algebra(group, members)
    sys.stdout.write(codec.serialize_structure(bundle).decode("utf-8"))
    return 0


def _parse_require(spec: str) -> dict[str, bool]:
    require: dict[str, bool] = {}
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" in part:
            name, _, value = part.partition("=")
            value = value.strip().lower()
            if value not in ("true", "false"):
                raise InputError(f"flag value must be true or false, got {value!r}")
            require[name.strip()] = value == "true"
        else:
            require[part] = True
    return require


def cmd_search(args) -> int:
    spec = SearchSpec(
        order=args.order,
        require=_parse_require(args.require) if args.require else {},
        cell_size_max=args.cell_max,
        seed=args.seed,
        node_budget=args.budget,
        count=args.count,
    )
    found = search_structures(spec)
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    for k, bundle in enumerate(found, start=1):
        payload = codec.serialize_structure(bundle)
        if out_dir:
            path = out_dir / f"search_{k:03d}.json"
            path.write_bytes(payload)
            print(path)
        else:
            sys.stdout.write(payload.decode("utf-8"))
    if not found:
        print("search exhausted: no structure matched within the budget", file=sys.stderr)
    return 0


def cmd_fixtures(args) -> int:
    if args.action == "list":
        for fid in fixtures_mod.FIXTURE_IDS:
            fx = fixtures_mod.get_fixture(fid)
            print(f"{fid:<16} order {fx.bundle.table.order:>2}  {fx.bundle.name}")
        return 0
    if args.action == "dump":
        if not args.id:
            raise InputError("fixtures dump needs a fixture id")
        fx = fixtures_mod.get_fixture(args.id)
        sys.stdout.write(codec.serialize_structure(fx.bundle).decode("utf-8"))
        return 0
    return _fixtures_check()


def _fixtures_check() -> int:
    failures = 0
    for fid in fixtures_mod.FIXTURE_IDS:
        fx = fixtures_mod.get_fixture(fid)
        bundle = fx.bundle
        table = bundle.table
        problems: list[str] = []
        profile = classify(bundle)
        flags = profile.flags()
        for name, wanted in fx.expected_flags.items():
            if flags[name].holds is not wanted:
                problems.append(f"flag {name}: expected {wanted}, got {_flag_str(flags[name])}")
        rep = compute_nucleus_report(table)
        if fx.published_nuclei is not None and not fx.nuclei_erratum:
            for side in SIDES:
                want = table.mask_from_labels(fx.published_nuclei[side])
                for order in ORDERS:
                    got = rep.members(order, side)
                    if got != want:
                        problems.append(
                            f"nucleus order {order} {side}: expected "
                            f"{table.format_set(want)}, got {table.format_set(got)}")
            want_inter = table.mask_from_labels(fx.published_intersection)
            for order, got in rep.intersections.items():
                if got != want_inter:
                    problems.append(f"intersection order {order}: expected "
                                    f"{table.format_set(want_inter)}")
        if fx.nuclei_erratum:
            # published sets are inconsistent; require the two computation
            # paths to agree instead, and surface the divergence
            for side in SIDES:
                fast = rep.members(1, side)
                for order in (2, 3, 4):
                    brute = nucleus_bruteforce(table, order, side, subset_cap=table.order)
                    if brute != fast:
                        problems.append(f"oracle disagrees at order {order} {side}")
            print(f"note  {fid}: {fx.nuclei_erratum}")
        theorem = verify_containment_theorems(table, mode="fast")
        if not theorem.all_hold:
            problems.append("containment clauses fail")
        if problems:
            failures += 1
            print(f"FAIL  {fid}")
            for p in problems:
                print(f"      {p}")
        else:
            print(f"ok    {fid}")
    if failures:
        print(f"{failures} fixture(s) failed", file=sys.stderr)
        return 2
    print("all fixtures match their published expectations")
    return 0


def cmd_report(args) -> int:
    bundle = _load_bundle(args.file)
    paths = report_mod.write_report(bundle, Path(args.out_dir), brute=args.brute,
                                    subset_cap=args.cap)
    for p in paths:
        print(p)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypertab",
        description="Classify finite hyperstructure tables, compute their "
                    "nuclei, verify containments, construct and search examples.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="structure-class profile of a table file")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("nuclei", help="the twelve nucleus sets and intersections")
    p.add_argument("file")
    p.add_argument("--orders", default="1,2,3,4")
    p.add_argument("--brute", action="store_true",
                   help="use the literal powerset oracle for orders 2..4")
    p.add_argument("--cap", type=int, default=DEFAULT_SUBSET_CAP,
                   help="largest table order the oracle accepts")
    p.add_argument("--timings", action="store_true", help="include per-entry timings")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_nuclei)

    p = sub.add_parser("verify", help="check the twenty containment clauses")
    p.add_argument("file")
    p.add_argument("--brute", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_SUBSET_CAP)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a structure from a group file")
    p.add_argument("kind", choices=("quotient", "double-coset"))
    p.add_argument("--group", required=True, help="group file (singleton table)")
    p.add_argument("--subgroup", required=True, help="comma-separated member names")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="backtracking search for structures")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--require", default="",
                   help="comma-separated flags, e.g. polyloop,semihypergroup=false")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--cell-max", type=int, default=None, dest="cell_max")
    p.add_argument("--out-dir", default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("fixtures", help="bundled example structures")
    p.add_argument("action", choices=("list", "dump", "check"))
    p.add_argument("id", nargs="?")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("report", help="write CSV summaries and figure files")
    p.add_argument("file")
    p.add_argument("--out-dir", default=".")
    p.add_argument("--brute", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_SUBSET_CAP)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalCheckError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
