"""Report rows, canonical emission and the command-line surface."""

import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from cremonalab.pole_cycles import configuration_rows
from cremonalab.report import VerificationReport, checked, emit, exit_code, informational
from cremonalab.suites import DOCUMENTED_CLAIM_IDS

PKG_ROOT = Path(__file__).resolve().parent.parent


def run_cli(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "cremonalab.cli", *args],
        capture_output=True,
        text=True,
        cwd=PKG_ROOT,
        **kwargs,
    )


# --- report rows ---------------------------------------------------------


def test_report_invariants_enforced():
    with pytest.raises(ValueError):
        VerificationReport("x.y", "anchor", 1, 2, "paper", "pass")
    with pytest.raises(ValueError):
        VerificationReport("x.y", "anchor", 1, 1, "paper", "fail")
    with pytest.raises(ValueError):
        VerificationReport("x.y", "anchor", 1, 1, "paper", "informational")
    with pytest.raises(ValueError):
        VerificationReport("x.y", "anchor", 1, 1, "paper", "maybe")


def test_checked_and_exit_codes():
    good = checked("a.b", "anchor", 3, 3, "paper")
    bad = checked("a.c", "anchor", 3, 4, "paper")
    info = informational("a.d", "anchor", {"seen": 1}, "derived")
    assert good.status == "pass"
    assert bad.status == "fail"
    assert exit_code([good, info]) == 0
    assert exit_code([good, bad]) == 1


def test_emit_json_is_canonical():
    rows = [checked("a.b", "anchor", 1, 1, "paper")]
    doc = emit(rows, "json")
    parsed = json.loads(doc)
    assert parsed["summary"] == {"total": 1, "pass": 1, "fail": 0, "informational": 0}
    assert doc == emit(rows, "json")
    # wall times are excluded unless asked for
    assert "wall_time" not in doc
    timed = emit([checked("a.b", "anchor", 1, 1, "paper", wall_time=0.5)], "json",
                 include_times=True)
    assert json.loads(timed)["reports"][0]["wall_time"] == 0.5


def test_emit_md_groups_by_suite():
    rows = [
        checked("alpha.one", "anchor", 1, 1, "paper"),
        checked("beta.two", "anchor", 2, 2, "paper"),
        checked("alpha.three", "anchor", 3, 3, "paper"),
    ]
    table = emit(rows, "md")
    assert table.index("## alpha") < table.index("## beta")
    assert "3 rows, 0 failing." in table


# --- CLI surface ---------------------------------------------------------


def test_cli_verify_lemma52():
    result = run_cli("verify", "lemma52", "--n", "5")
    assert result.returncode == 0, result.stderr
    doc = json.loads(result.stdout)
    assert [r["claim_id"] for r in doc["reports"]] == ["lemma52.n5"]
    assert doc["reports"][0]["status"] == "pass"
    assert doc["reports"][0]["anchor"] == "Lemma 5.2 (n = 5)"


def test_cli_verify_rejects_bad_n_without_flag():
    result = run_cli("verify", "lemma52", "--n", "5,6")
    assert result.returncode == 1
    doc = json.loads(result.stdout)
    assert doc["summary"]["fail"] == 1


def test_cli_verify_allows_bad_n_with_flag():
    result = run_cli("verify", "lemma52", "--n", "6", "--allow-bad-n")
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["reports"][0]["status"] == "informational"


def test_cli_enumerate_matches_library():
    result = run_cli("enumerate", "--degree", "6", "--emit", "json")
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["degree"] == 6
    assert doc["rows"] == json.loads(json.dumps(configuration_rows(6)))
    for row in doc["rows"]:
        assert set(row) == {"labels", "genus", "K2", "symmetry_order",
                            "symmetry_kind", "witness_base", "witness_word"}


def test_cli_enumerate_rejects_out_of_range_degree():
    result = run_cli("enumerate", "--degree", "9")
    assert result.returncode == 2
    assert "error" in result.stderr


def test_cli_dp5_check():
    result = run_cli("dp5", "check", "--emit", "json")
    assert result.returncode == 0, result.stderr
    rows = json.loads(result.stdout)["rows"]
    assert [r["name"] for r in rows] == ["s5", "a5", "g5_4", "g5_2", "c5"]
    verdicts = [r["rational_line_exists"] for r in rows]
    assert verdicts == [False, False, False, True, True]
    for row in rows:
        assert set(row) == {"name", "order", "rational_line_exists",
                            "fix_space_dim", "complex_note", "caveat"}


def test_cli_conic_simulate_deterministic():
    first = run_cli("conic", "simulate", "--seed", "3", "--trials", "25")
    second = run_cli("conic", "simulate", "--seed", "3", "--trials", "25")
    assert first.returncode == 0
    assert first.stdout == second.stdout
    doc = json.loads(first.stdout)
    assert doc["trials"] == 25
    assert doc["bound_violations"] == 0


def test_cli_jordan_groupfile(tmp_path):
    path = tmp_path / "quaternion.json"
    path.write_text(json.dumps({
        "kind": "perm",
        "degree": 8,
        "generators": [[[1, 2, 3, 4], [5, 6, 7, 8]], [[1, 5, 3, 7], [2, 8, 4, 6]]],
    }))
    result = run_cli("jordan", str(path))
    assert result.returncode == 0, result.stderr
    assert json.loads(result.stdout) == {
        "order": 8,
        "jordan_index": 2,
        "witness_order": 4,
        "normal_subgroup_count": 6,
    }


def test_cli_jordan_bad_inputs(tmp_path):
    missing = run_cli("jordan", str(tmp_path / "nope.json"))
    assert missing.returncode == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "modmatrix", "modulus": 4, "generators": [[[2, 0], [0, 1]]]}')
    result = run_cli("jordan", str(bad))
    assert result.returncode == 2
    assert "invertible" in result.stderr


def test_cli_report_md_and_parallel_match():
    sequential = run_cli("report", "conic", "--trials", "20", "--emit", "md")
    assert sequential.returncode == 0
    assert "## conic" in sequential.stdout
    again = run_cli("report", "conic", "--trials", "20", "--emit", "md")
    assert sequential.stdout == again.stdout


def test_cli_usage_errors_exit_2():
    assert run_cli("report", "everything").returncode == 2
    assert run_cli("frobnicate").returncode == 2
    assert run_cli("verify", "lemma52", "--n", "five").returncode == 2
    assert run_cli().returncode == 2


def test_documented_ids_appear_in_readme_and_suites():
    readme = (PKG_ROOT / "README.md").read_text()
    mentioned = set(re.findall(r"\b(?:lemma52|prop44|prop57|conic|thm79|consts)\.[a-z0-9_]+", readme))
    assert mentioned, "README should document claim ids"
    assert mentioned <= set(DOCUMENTED_CLAIM_IDS)
