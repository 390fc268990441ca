from __future__ import annotations

import io

import pytest

from square_sets.cli import run
from square_sets.results import ResultRecord
from tables import LAGRANGE_SIX, TABLE_1


def invoke(*argv: str):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def test_verify_complete_set_prints_tsv():
    code, out, _ = invoke("verify", "--set", "-40,65,104,296")
    assert code == 0
    assert out == "4\t425\t505\t-40,65,104,296\t6\t6\n"


def test_verify_incomplete_set_exits_one():
    code, out, _ = invoke("verify", "--set", "-2,3,11")
    assert code == 1
    assert out.split("\t")[4:6] == ["2", "3\n"]


def test_verify_triples():
    code, out, _ = invoke("verify", "--triples", "--set", "92763,4914963,7559299,9945963,16308963")
    assert code == 0
    assert out.rstrip("\n").split("\t")[4:] == ["10", "10", "check=triples"]


@pytest.mark.parametrize("literal, token", [("1,2x,3", "2x"), ("3,3,5", "3"), ("0,4", "0")])
def test_malformed_literal_is_a_usage_error(literal, token):
    code, out, err = invoke("verify", "--set", literal)
    assert code == 2 and out == ""
    assert f"(token: {token!r})" in err


def test_unknown_command_is_a_usage_error():
    code, _, _ = invoke("frobnicate")
    assert code == 2


def test_search3_degenerate_is_a_usage_error():
    code, _, err = invoke("search3", "--p", "1", "--q", "1", "--r", "1")
    assert code == 2 and err.startswith("error:")


def test_search3():
    code, out, _ = invoke("search3", "--p", "1", "--q", "2", "--r", "3")
    assert code == 0
    assert out.split("\t")[3] == "-2,3,6"


def test_search4_reproduces_first_table():
    code, out, _ = invoke("search4", "--smax", "1500")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert [tuple(int(x) for x in row[3].split(",")) for row in rows] == TABLE_1
    assert all(row[4] == row[5] == "6" for row in rows)


def test_search4_jsonl_round_trip():
    code, out, _ = invoke("search4", "--smax", "1500", "--top", "2", "--format", "jsonl")
    assert code == 0
    records = [ResultRecord.from_json(line) for line in out.splitlines()]
    assert [tuple(record.elements) for record in records] == TABLE_1[:2]
    assert records[0].sum == 425 and records[0].roots[0] == (0, 1, 5)
    assert '"sum":"425"' in out.splitlines()[0]


def test_output_does_not_depend_on_threads():
    single = invoke("search4", "--smax", "3000", "--top", "50", "--threads", "1")
    double = invoke("search4", "--smax", "3000", "--top", "50", "--threads", "2")
    assert single[1] == double[1]


def test_search4_checkpoint(tmp_path):
    path = tmp_path / "progress.txt"
    code, _, _ = invoke("search4", "--smax", "1500", "--checkpoint", str(path))
    assert code == 0
    assert path.read_text().strip().splitlines()[-1] == "1500"


def test_transform():
    code, out, _ = invoke("transform", "--set", "-4878,4978,6903,12978,31122")
    assert code == 0
    assert out.split("\t")[3] == "-126789,36507,91182,108507,197211"


def test_extend_one_based_anchor():
    code, out, _ = invoke("extend", "--set", "-4878,4978,6903,12978", "--anchor", "1,2")
    assert code == 0
    line = next(line for line in out.splitlines() if "new=31122" in line)
    assert "anchor=1,2" in line and "w=162" in line and "y=190" in line


def test_extend_all_anchors_finds_near_solution():
    literal = ",".join(str(x) for x in LAGRANGE_SIX)
    code, out, _ = invoke("extend", "--set", literal, "--all-anchors", "--require-pairs", "18")
    assert code == 0
    assert "new=15945698" in out


def test_extend_bad_anchor():
    code, _, err = invoke("extend", "--set", "-2,3,6", "--anchor", "1,9")
    assert code == 2 and "Anchor" in err


def test_quartic():
    code, out, _ = invoke("quartic", "--coeffs", "1,0,2", "--bound", "2")
    assert code == 0
    assert [line.split("\t")[-1] for line in out.splitlines()] == [
        "g=1;h=1;f=2",
        "g=1;h=2;f=5",
        "g=2;h=1;f=5",
    ]


def test_quartic_bad_coeffs():
    code, _, _ = invoke("quartic", "--coeffs", "1,2", "--bound", "5")
    assert code == 2


def test_identity():
    code, out, _ = invoke("identity", "--args", "1,2,3,4")
    assert code == 0
    assert out.rstrip("\n").split("\t")[-1] == "s=30;parts=20,4,22"


def test_prob_without_sampling():
    code, out, _ = invoke("prob", "--format", "jsonl")
    record = ResultRecord.from_json(out.splitlines()[0])
    assert code == 0 and record.kind == "prob"
    assert float(record.meta["closed_form"]) == pytest.approx(0.0058218, abs=1e-6)


def test_prob_with_sampling_is_reproducible():
    first = invoke("prob", "--mc", "20000", "--seed", "9", "--format", "jsonl")
    second = invoke("prob", "--mc", "20000", "--seed", "9", "--format", "jsonl", "--threads", "2")
    assert first == second
    assert len(first[1].splitlines()) == 4


def test_fixtures_command():
    code, out, _ = invoke("fixtures")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert all("passed=yes" in line for line in lines)


def test_fixtures_command_reports_failures(tmp_path):
    path = tmp_path / "sets.txt"
    path.write_text("n=3 expect=3 -2,3,11\n", encoding="utf-8")
    code, out, _ = invoke("fixtures", "--file", str(path))
    assert code == 1 and "passed=no" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("prob", "--mc", "10", "--threads", "-1"),
        ("quartic", "--coeffs", "1,0,2", "--bound", "3", "--threads", "-1"),
        ("search4", "--smax", "100", "--threads", "-1"),
    ],
)
def test_negative_threads_is_a_usage_error(argv):
    code, out, err = invoke(*argv)
    assert code == 2 and out == ""
    assert err.startswith("error:") and "workers" in err


def test_missing_fixture_file_is_a_usage_error(tmp_path):
    code, out, err = invoke("fixtures", "--file", str(tmp_path / "missing.txt"))
    assert code == 2 and out == ""
    assert err.startswith("error:")
