import csv

from hypertab.fixtures import FIXTURES
from hypertab.report import write_report


def test_write_report_artifacts(tmp_path):
    paths = write_report(FIXTURES["tab5"].bundle, tmp_path, stem="loop6")
    assert [p.name for p in paths] == [
        "loop6_profile.csv", "loop6_nuclei.csv",
        "loop6_table.png", "loop6_nuclei.png",
    ]
    for p in paths:
        assert p.exists() and p.stat().st_size > 0


def test_profile_csv_contents(tmp_path):
    paths = write_report(FIXTURES["tab5"].bundle, tmp_path, stem="loop6")
    with paths[0].open() as fh:
        rows = list(csv.DictReader(fh))
    by_flag = {r["flag"]: r for r in rows}
    assert by_flag["polyloop"]["verdict"] == "holds"
    assert by_flag["semihypergroup"]["verdict"] == "fails"
    assert by_flag["semihypergroup"]["witness"]


def test_nuclei_csv_contents(tmp_path):
    paths = write_report(FIXTURES["tab8"].bundle, tmp_path, stem="pq12")
    with paths[1].open() as fh:
        rows = list(csv.DictReader(fh))
    side_rows = [r for r in rows if r["side"] == "middle" and r["order"] == "1"]
    assert side_rows[0]["members"] == "A B G H"
    inter = [r for r in rows if r["side"] == "intersection"]
    assert len(inter) == 4
    assert all(r["members"] == "A H" for r in inter)


def test_figures_are_png(tmp_path):
    paths = write_report(FIXTURES["tab1"].bundle, tmp_path, stem="pg6")
    for p in paths[2:]:
        assert p.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
