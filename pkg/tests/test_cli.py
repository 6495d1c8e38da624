import csv
import io
import json

import pytest

from oreforge import cli, fixtures
from oreforge.analyzer import TrinomialField, analyze
from oreforge.cli import (
    CSV_COLUMNS, EXIT_FAIL, EXIT_INVALID, EXIT_OK, ReportRecord, UsageError, main, parse_range,
    rows_to_csv, rows_to_jsonl, run_scan, scan_fields,
)
from oreforge.intfactor import Budget


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ---------------------------------------------------------------- analyze

def test_analyze_summary_with_exponents(capsys):
    code, out, _ = run(capsys, "analyze", "-a", "336", "-b", "5195", "-m", "1")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert "2, 3 | i(K): NOT monogenic" in lines
    assert "i(K) divisible by 4 and 3; ν_2=2, ν_3=1; NOT monogenic" in lines


def test_analyze_divisibility_only(capsys):
    code, out, _ = run(capsys, "analyze", "-a", "72", "-b", "51", "-m", "5")
    assert code == EXIT_OK
    assert "2 | i(K): NOT monogenic" in out.splitlines()


def test_analyze_monogenic(capsys):
    code, out, _ = run(capsys, "analyze", "-a", "1", "-b", "1", "-m", "1")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "Z[alpha] is the ring of integers: monogenic"


@pytest.mark.parametrize("argv", [
    ["analyze", "-a", "0", "-b", "1", "-m", "1"],  # x^12 + 1 has the factor x^4 + 1
    ["analyze", "-a", "1", "-b", "0", "-m", "1"],
    ["analyze", "-a", "1", "-b", "1", "-m", "12"],
    ["analyze", "-a", "1", "-b", "1"],
    ["analyze", "-a", "1", "-b", "1", "--twok", "3"],
    ["analyze", "-a", "2", "-b", "1", "-m", "6"],
    ["analyze", "-a", "x", "-b", "1", "-m", "1"],
    ["bogus"],
])
def test_analyze_invalid_input(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_INVALID


def test_analyze_twok(capsys):
    code, out, _ = run(capsys, "analyze", "-a", "14", "-b", "90", "--twok", "10")
    assert code == EXIT_OK
    assert "3 | i(K)" in out


def test_analyze_general_degree(capsys):
    code, out, _ = run(capsys, "analyze", "-a", "2", "-b", "9", "-m", "2", "--n", "6")
    assert code == EXIT_OK
    assert out.startswith("F = x^6 + 2x^2 + 9")


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "analyze", "-a", "24576", "-b", "216128", "-m", "1", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["version"] == cli.SCHEMA_VERSION
    # integers are serialized as strings
    assert data["field"]["a"] == "24576"
    rec = ReportRecord.from_json(out)
    assert ReportRecord.from_json(rec.to_json()) == rec
    again = ReportRecord.from_report(analyze(TrinomialField(rec.a, rec.b, rec.m, rec.n)))
    assert again == rec


def test_json_rejects_other_versions():
    rec = ReportRecord.from_report(analyze(TrinomialField(1, 1)))
    d = rec.to_dict()
    d["version"] = "99"
    with pytest.raises(ValueError):
        ReportRecord.from_dict(d)


def test_seed_does_not_change_output(capsys, monkeypatch):
    _, base, _ = run(capsys, "analyze", "-a", "336", "-b", "5195", "-m", "1", "--json")
    monkeypatch.setenv("ORE_FORGE_SEED", "12345")
    _, seeded, _ = run(capsys, "analyze", "-a", "336", "-b", "5195", "-m", "1", "--json")
    assert seeded == base


# ---------------------------------------------------------------- scan

@pytest.mark.parametrize("text,values", [("1:3", [1, 2, 3]), ("-2:0", [-2, -1, 0]), ("5", [5]),
                                         ("1,4,7", [1, 4, 7]), ("3:1", [])])
def test_parse_range(text, values):
    assert parse_range(text) == values


def test_parse_range_rejects_garbage():
    with pytest.raises(UsageError):
        parse_range("a:b")


def test_scan_fields_skip_zero_b():
    assert list(scan_fields([1], [-1, 0, 1], [1])) == [(1, -1, 1, 12), (1, 1, 1, 12)]


def test_scan_csv(capsys):
    code, out, err = run(capsys, "scan", "-a", "70:72", "-b", "50:51", "-m", "1")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == CSV_COLUMNS
    assert all(len(r) == len(CSV_COLUMNS) for r in rows)
    assert any(r[:5] == ["72", "51", "1", "2", "yes"] for r in rows)
    assert "NotMonogenic" in err


def test_scan_quiet_json(capsys):
    code, out, err = run(capsys, "scan", "-a", "72", "-b", "51", "-m", "1,5", "--format", "json", "--quiet")
    assert code == EXIT_OK
    assert err == ""
    lines = [json.loads(x) for x in out.splitlines()]
    assert [d["m"] for d in lines] == ["1", "5"]
    assert all(d["verdict"] == "NotMonogenic" for d in lines)


def test_scan_empty_range(capsys):
    code, out, err = run(capsys, "scan", "-a", "5:1", "-b", "1:3")
    assert code == EXIT_OK
    assert out == "" and err == ""


def test_scan_bad_m(capsys):
    code, _, _ = run(capsys, "scan", "-a", "1", "-b", "1", "-m", "12")
    assert code == EXIT_INVALID


def test_scan_bad_jobs(capsys):
    code, _, _ = run(capsys, "scan", "-a", "1", "-b", "1", "--jobs", "0")
    assert code == EXIT_INVALID


def test_scan_out_file(capsys, tmp_path):
    target = tmp_path / "scan.csv"
    code, out, _ = run(capsys, "scan", "-a", "1:2", "-b", "1:2", "--out", str(target), "--quiet")
    assert code == EXIT_OK and out == ""
    assert target.read_text().splitlines()[0] == ",".join(CSV_COLUMNS)


def test_scan_parallel_matches_serial():
    fields = list(scan_fields(range(-6, 6), range(-6, 6), [1, 2]))
    serial = run_scan(fields, Budget.light(), jobs=1)
    parallel = run_scan(fields, Budget.light(), jobs=2)
    assert rows_to_csv(serial) == rows_to_csv(parallel)
    assert rows_to_jsonl(serial) == rows_to_jsonl(parallel)


# ---------------------------------------------------------------- polygon

def test_polygon_text(capsys):
    code, out, _ = run(capsys, "polygon", "-a", "84", "-b", "147", "-p", "2", "--phi", "x-1")
    assert code == EXIT_OK
    assert "vertices: (0,3), (2,1), (4,0)" in out
    assert "residual on (2, 1)->(4, 0): y + 1 (regular)" in out
    assert out.splitlines()[-1] == "ind_phi = 3"


def test_polygon_json(capsys):
    code, out, _ = run(capsys, "polygon", "-a", "576", "-b", "386", "-p", "2", "--json")
    assert code == EXIT_OK
    d = json.loads(out)
    assert d["vertices"] == [["0", "1"], ["12", "0"]]
    assert d["ind"] == "0"
    assert d["sides"][0]["regular"] is True


@pytest.mark.parametrize("argv", [
    ["polygon", "-a", "1", "-b", "1", "-p", "2", "--phi", "x^2+1"],  # (x + 1)^2 mod 2
    ["polygon", "-a", "1", "-b", "1", "-p", "4"],
    ["polygon", "-a", "1", "-b", "1", "-p", "2", "--phi", "2x+1"],
    ["polygon", "-a", "1", "-b", "1", "-p", "2", "--phi", "x^"],
    ["polygon", "-a", "0", "-b", "-1", "-p", "2", "--phi", "x-1"],  # x - 1 divides x^12 - 1
])
def test_polygon_invalid(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_INVALID
    assert err.startswith("error:")


# ---------------------------------------------------------------- fixture corpus

def test_fixture_corpus_passes(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == EXIT_OK
    total = len(cli.all_checks())
    assert out.splitlines()[-1] == f"fixtures: {total} pass / 0 fail"


def test_fixture_corpus_only_p3(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "p=3", "-v")
    assert code == EXIT_OK
    assert "shape p2." not in out
    assert out.splitlines()[-1].endswith("pass / 0 fail")


def test_fixture_corpus_bad_filter(capsys):
    code, _, _ = run(capsys, "verify-paper", "--only", "q=3")
    assert code == EXIT_INVALID


def test_fixture_corpus_detects_corruption(capsys, monkeypatch):
    good = fixtures.SHAPES[0]
    bad = fixtures.ShapeFixture(good.id, good.p, good.a, good.b, good.m, ((12, 1),), good.nu_index,
                                (((12, 1),),))
    monkeypatch.setattr(fixtures, "SHAPES", [bad] + fixtures.SHAPES[1:])
    code, out, _ = run(capsys, "verify-paper")
    assert code == EXIT_FAIL
    assert "FAIL shape " + good.id in out
    assert out.splitlines()[-1].endswith("pass / 1 fail")
