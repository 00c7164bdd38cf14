"""Report rendering: delimited summaries plus figure files.

For a bundle this writes four artifacts into an output directory:
``<stem>_profile.csv`` (one classification flag per row),
``<stem>_nuclei.csv`` (one nucleus set per row plus intersections),
``<stem>_table.png`` (cell-cardinality heat map with member annotations)
and ``<stem>_nuclei.png`` (element-by-nucleus membership grid).
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .axioms import StructureProfile, classify
from .core import Members, StructureBundle
from .nuclei import ORDERS, SIDES, NucleusReport, compute_nucleus_report


def witness_text(bundle: StructureBundle, witness) -> str:
    """Human form of a witness tuple: indices as names, masks as sets."""
    if witness is None:
        return ""
    table = bundle.table
    parts = []
    for item in witness:
        if isinstance(item, Members):
            parts.append(table.format_set(item))
        elif isinstance(item, int):
            parts.append(table.names[item])
        else:
            parts.append(str(item))
    return "(" + ", ".join(parts) + ")"


def write_profile_csv(bundle: StructureBundle, profile: StructureProfile, path: Path) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["flag", "verdict", "witness", "note"])
        for name, flag in profile.flags().items():
            verdict = {True: "holds", False: "fails", None: "not determinable"}[flag.holds]
            witness = witness_text(bundle, flag.witness) if flag.holds is False else ""
            writer.writerow([name, verdict, witness, flag.note])


def write_nuclei_csv(bundle: StructureBundle, report: NucleusReport, path: Path) -> None:
    table = bundle.table
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["order", "side", "method", "members"])
        for entry in report.entries:
            writer.writerow([entry.order, entry.side, entry.method,
                             " ".join(table.labels_of(entry.members))])
        for order, members in sorted(report.intersections.items()):
            writer.writerow([order, "intersection", "", " ".join(table.labels_of(members))])


def render_table_figure(bundle: StructureBundle, path: Path) -> None:
    table = bundle.table
    n = table.order
    sizes = [[cell.bit_count() for cell in row] for row in table.cells]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.7 * n), max(4.0, 0.7 * n)))
    im = ax.imshow(sizes, cmap="YlGnBu", vmin=0, vmax=n)
    ax.set_xticks(range(n), table.names)
    ax.set_yticks(range(n), table.names)
    ax.set_xlabel("right factor")
    ax.set_ylabel("left factor")
    ax.set_title(f"{bundle.name}: cell sizes")
    if n <= 8:
        for i in range(n):
            for j in range(n):
                ax.text(j, i, ",".join(table.labels_of(table.cells[i][j])),
                        ha="center", va="center", fontsize=7)
    fig.colorbar(im, ax=ax, shrink=0.8, label="members per cell")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_nuclei_figure(bundle: StructureBundle, report: NucleusReport, path: Path) -> None:
    table = bundle.table
    n = table.order
    rows = []
    labels = []
    for order in ORDERS:
        for side in SIDES:
            members = report.members(order, side)
            rows.append([(members >> i) & 1 for i in range(n)])
            labels.append(f"{order}/{side}")
    for order, members in sorted(report.intersections.items()):
        rows.append([(members >> i) & 1 for i in range(n)])
        labels.append(f"{order}/all")
    fig, ax = plt.subplots(figsize=(max(4.0, 0.5 * n), max(4.0, 0.35 * len(rows))))
    ax.imshow(rows, cmap="Greys", vmin=0, vmax=1)
    ax.set_xticks(range(n), table.names)
    ax.set_yticks(range(len(rows)), labels)
    ax.set_xlabel("element")
    ax.set_ylabel("nucleus order/side")
    ax.set_title(f"{bundle.name}: nucleus membership")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(bundle: StructureBundle, out_dir: Path, stem: str | None = None,
                 brute: bool = False, subset_cap: int = 6) -> list[Path]:
    """Render all four artifacts; returns the paths written."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = stem or "".join(c if c.isalnum() or c in "-_" else "_" for c in bundle.name) or "structure"
    profile = classify(bundle)
    report = compute_nucleus_report(bundle.table, brute=brute, subset_cap=subset_cap)
    paths = [
        out_dir / f"{stem}_profile.csv",
        out_dir / f"{stem}_nuclei.csv",
        out_dir / f"{stem}_table.png",
        out_dir / f"{stem}_nuclei.png",
    ]
    write_profile_csv(bundle, profile, paths[0])
    write_nuclei_csv(bundle, report, paths[1])
    render_table_figure(bundle, paths[2])
    render_nuclei_figure(bundle, report, paths[3])
    return paths
