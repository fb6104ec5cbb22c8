import json
import shutil
import subprocess
import sys

import pytest

from binomsum.cli import main
from binomsum.pairs import builtin_document_text


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(text):
    return [json.loads(line) for line in text.splitlines()]


# ---------------------------------------------------------------------------
# sumcheck
# ---------------------------------------------------------------------------

def test_sumcheck_contract_example(capsys):
    code, out, _ = run_cli(capsys, "sumcheck", "--sum", "guillera1",
                           "--divisor", "strong", "--n-min", "2",
                           "--n-max", "50", "--format", "json")
    assert code == 0
    records = json_lines(out)
    assert len(records) == 49
    assert all(rec["status"] == "pass" for rec in records)
    first = records[0]
    assert first["params"] == {"sum": "guillera1", "divisor": "strong", "n": 2}
    assert first["witness"]["quotient"] == "-11"
    assert first["witness"]["value"] == "-3168"


def test_sumcheck_all_sums_with_valuation_route(capsys):
    code, out, _ = run_cli(capsys, "sumcheck", "--n-max", "6",
                           "--valuation-check", "--format", "json")
    assert code == 0
    records = json_lines(out)
    assert len(records) == 7 * 5
    assert all(rec["witness"]["valuation"] == "agree" for rec in records)


def test_sumcheck_failure_sets_exit_one(capsys):
    code, out, _ = run_cli(capsys, "sumcheck", "--sum", "sun_a",
                           "--divisor", "strong", "--n-max", "3",
                           "--format", "json")
    assert code == 1
    records = json_lines(out)
    assert any(rec["status"] == "fail" for rec in records)
    failing = [rec for rec in records if rec["status"] == "fail"]
    assert all("remainder" in rec["witness"] for rec in failing)


def test_sumcheck_rejects_bad_range(capsys):
    code, _, err = run_cli(capsys, "sumcheck", "--n-min", "1", "--n-max", "5")
    assert code == 2
    assert "n-min" in err


# ---------------------------------------------------------------------------
# wzcheck
# ---------------------------------------------------------------------------

def test_wzcheck_symbolic_contract_example(capsys):
    code, out, _ = run_cli(capsys, "wzcheck", "--pair", "builtin:guillera2",
                           "--mode", "symbolic", "--format", "json")
    assert code == 0
    (record,) = json_lines(out)
    assert record["status"] == "pass"
    assert record["witness"]["residual"] == "0"
    assert "certificate" in record["witness"]


def test_wzcheck_grid_summary(capsys):
    code, out, _ = run_cli(capsys, "wzcheck", "--pair", "builtin:guillera1",
                           "--mode", "grid", "--n-max", "10",
                           "--format", "json")
    assert code == 0
    records = json_lines(out)
    assert len(records) == 1
    summary = records[0]
    assert summary["witness"] == {"points": "55", "violations": "0",
                                  "skipped": "0"}


def test_wzcheck_telescope_records(capsys):
    code, out, _ = run_cli(capsys, "wzcheck", "--pair", "builtin:guillera1",
                           "--mode", "telescope", "--n-min", "2",
                           "--n-max", "4", "--format", "json")
    assert code == 0
    records = json_lines(out)
    assert [rec["params"]["N"] for rec in records] == [2, 3, 4]
    assert records[0]["witness"]["conclusion_quotient"] == "-11"


def test_wzcheck_unknown_builtin(capsys):
    code, _, err = run_cli(capsys, "wzcheck", "--pair", "builtin:missing",
                           "--mode", "grid")
    assert code == 2
    assert "missing" in err


def test_wzcheck_path_pair(tmp_path, capsys):
    pair_dir = tmp_path / "pair"
    pair_dir.mkdir()
    (pair_dir / "a.F").write_text(builtin_document_text("guillera1.F"),
                                  "utf-8")
    (pair_dir / "a.G").write_text(builtin_document_text("guillera1.G"),
                                  "utf-8")
    code, out, _ = run_cli(capsys, "wzcheck", "--pair", str(pair_dir),
                           "--mode", "grid", "--n-max", "6",
                           "--format", "json")
    assert code == 0
    assert json_lines(out)[0]["params"]["pair"] == "pair"

    code, _, err = run_cli(capsys, "wzcheck", "--pair", str(pair_dir),
                           "--mode", "telescope", "--n-max", "3")
    assert code == 2
    assert "scale-base" in err

    code, out, _ = run_cli(capsys, "wzcheck", "--pair", str(pair_dir),
                           "--mode", "telescope", "--n-max", "3",
                           "--scale-base", "-4096", "--format", "json")
    assert code == 0
    assert json_lines(out)[0]["witness"]["conclusion_quotient"] == "-11"


def test_wzcheck_rejects_bad_pair_directory(tmp_path, capsys):
    code, _, err = run_cli(capsys, "wzcheck", "--pair", str(tmp_path),
                           "--mode", "grid")
    assert code == 2
    assert ".F" in err


# ---------------------------------------------------------------------------
# lemma
# ---------------------------------------------------------------------------

def test_lemma24_contract_example(capsys):
    code, out, _ = run_cli(capsys, "lemma", "--id", "2.4", "--m-max", "2",
                           "--format", "json")
    assert code == 1
    records = json_lines(out)
    assert records[0]["status"] == "fail"
    assert records[0]["witness"]["violations"] == "1"
    violation = records[1]
    assert violation["params"] == {"id": "2.4", "m": 2, "n": 1, "k": 1}
    assert violation["witness"]["margin"] == "-1"


def test_lemma24_regions_clean(capsys):
    for region in ("k0", "case3a"):
        code, out, _ = run_cli(capsys, "lemma", "--id", "2.4", "--m-max",
                               "30", "--region", region, "--format", "json")
        assert code == 0
        (summary,) = json_lines(out)
        assert summary["witness"]["violations"] == "0"


def test_lemma24_full_range(capsys):
    code, out, _ = run_cli(capsys, "lemma", "--id", "2.4", "--m-max", "2",
                           "--full-range", "3", "--format", "json")
    assert code == 1
    records = json_lines(out)
    points = {(rec["params"]["m"], rec["params"]["n"], rec["params"]["k"])
              for rec in records[1:]}
    assert points == {(2, 1, 1), (2, 3, 1), (2, 3, 3)}


def test_lemma22_rows(capsys):
    code, out, _ = run_cli(capsys, "lemma", "--id", "2.2", "--n-max", "12",
                           "--format", "json")
    assert code == 0
    records = json_lines(out)
    assert len(records) == 12
    assert all(rec["witness"]["violations"] == "0" for rec in records)


def test_lemma23_quotient_witnesses(capsys):
    code, out, _ = run_cli(capsys, "lemma", "--id", "2.3", "--n-max", "5",
                           "--format", "json")
    assert code == 0
    records = json_lines(out)
    assert records[0]["witness"]["quotient"] == "9"
    assert records[1]["witness"]["closed_form"] == "675"


def test_lemma25_summary(capsys):
    code, out, _ = run_cli(capsys, "lemma", "--id", "2.5", "--n-max", "12",
                           "--format", "json")
    assert code == 0
    (summary,) = json_lines(out)
    assert summary["status"] == "pass"
    assert summary["witness"]["checked"] == "78"


def test_lemma26_points_and_inequality(capsys):
    code, out, _ = run_cli(capsys, "lemma", "--id", "2.6", "--n-max", "10",
                           "--m-max", "20", "--format", "json")
    assert code == 0
    records = json_lines(out)
    assert len(records) == 11
    assert records[0]["witness"]["quotient"] == "1"
    assert records[1]["witness"]["quotient"] == "70"
    assert records[-1]["params"]["inequality"] == "five-floor"


def test_lemma_rejects_bad_bounds(capsys):
    code, _, err = run_cli(capsys, "lemma", "--id", "2.4", "--m-max", "1")
    assert code == 2
    assert "m-max" in err


# ---------------------------------------------------------------------------
# ratio
# ---------------------------------------------------------------------------

def test_ratio_single_identity(capsys):
    code, out, _ = run_cli(capsys, "ratio", "--id", "g1_col1", "--n-min", "2",
                           "--n-max", "6", "--format", "json")
    assert code == 0
    records = json_lines(out)
    assert len(records) == 5
    assert records[0]["witness"]["lhs"] == "9"


def test_ratio_k_family_summaries(capsys):
    code, out, _ = run_cli(capsys, "ratio", "--id", "g2_gen", "--n-min", "2",
                           "--n-max", "4", "--format", "json")
    assert code == 0
    records = json_lines(out)
    assert [rec["witness"]["k_checked"] for rec in records] == ["3", "4", "5"]


def test_ratio_all(capsys):
    code, out, _ = run_cli(capsys, "ratio", "--n-min", "2", "--n-max", "3",
                           "--format", "json")
    assert code == 0
    ids = [rec["params"]["id"] for rec in json_lines(out)]
    assert ids == ["g1_col1", "g1_col1", "g1_gen", "g1_gen", "f1_corner",
                   "f1_corner", "catalan_split", "catalan_split", "g2_gen",
                   "g2_gen", "f2_corner", "f2_corner", "telescoped_sum",
                   "telescoped_sum"]


# ---------------------------------------------------------------------------
# term
# ---------------------------------------------------------------------------

def test_term_eval_builtin(capsys):
    code, out, _ = run_cli(capsys, "term", "eval", "builtin:guillera1.F",
                           "--n", "2", "--k", "1", "--format", "json")
    assert code == 0
    (record,) = json_lines(out)
    assert record["witness"]["value"] == "-28755/32768"


def test_term_eval_requires_point(capsys):
    code, _, err = run_cli(capsys, "term", "eval", "builtin:guillera1.F")
    assert code == 2
    assert "--n" in err


def test_term_serialize_round_trips(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "term", "serialize", "builtin:guillera2.G")
    assert code == 0
    assert out == builtin_document_text("guillera2.G")

    src = tmp_path / "copy.G"
    src.write_text(out, "utf-8")
    code, out2, _ = run_cli(capsys, "term", "serialize", str(src))
    assert code == 0
    assert out2 == out


def test_term_parse_reports_structure(capsys):
    code, out, _ = run_cli(capsys, "term", "parse", "builtin:guillera1.F",
                           "--format", "json")
    assert code == 0
    (record,) = json_lines(out)
    assert record["witness"]["name"] == "guillera1.F"
    assert record["witness"]["binom_factors"] == "5"


def test_term_parse_error_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.F"
    bad.write_text("term x\npoly 3*n-\nend\n", "utf-8")
    code, _, err = run_cli(capsys, "term", "parse", str(bad))
    assert code == 2
    assert "bad.F" in err


def test_term_eval_pole_is_audit_failure(tmp_path, capsys):
    doc = tmp_path / "pole.F"
    doc.write_text("term pole\npoly 1\ndenompoly n-2\nend\n", "utf-8")
    code, out, _ = run_cli(capsys, "term", "eval", str(doc),
                           "--n", "2", "--k", "0", "--format", "json")
    assert code == 1
    (record,) = json_lines(out)
    assert record["status"] == "fail"


# ---------------------------------------------------------------------------
# Output handling, parallelism, determinism
# ---------------------------------------------------------------------------

def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "sumcheck", "--sum", "sun_a", "--n-max",
                           "4", "--format", "json", "--output", str(target))
    assert code == 0
    assert out == ""
    assert len(target.read_text("utf-8").splitlines()) == 3


def test_reports_byte_identical_across_jobs(tmp_path, capsys):
    outputs = []
    for jobs in ("1", "2", "3"):
        target = tmp_path / f"jobs{jobs}.json"
        code, _, _ = run_cli(capsys, "sumcheck", "--n-max", "12",
                             "--format", "json", "--jobs", jobs,
                             "--output", str(target))
        assert code == 0
        outputs.append(target.read_bytes())
    assert outputs[0] == outputs[1] == outputs[2]


def test_grid_reports_byte_identical_across_jobs(tmp_path, capsys):
    outputs = []
    for jobs in ("1", "4"):
        target = tmp_path / f"grid{jobs}.json"
        code, _, _ = run_cli(capsys, "wzcheck", "--pair", "builtin:guillera2",
                             "--mode", "grid", "--n-max", "15",
                             "--format", "json", "--jobs", jobs,
                             "--output", str(target))
        assert code == 0
        outputs.append(target.read_bytes())
    assert outputs[0] == outputs[1]


def test_jobs_env_var_default(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("BINOMSUM_JOBS", "2")
    a = tmp_path / "env.json"
    code, _, _ = run_cli(capsys, "sumcheck", "--sum", "sun_b", "--n-max",
                         "8", "--format", "json", "--output", str(a))
    assert code == 0
    monkeypatch.setenv("BINOMSUM_JOBS", "zero")
    code, _, err = run_cli(capsys, "sumcheck", "--sum", "sun_b")
    assert code == 2
    assert "BINOMSUM_JOBS" in err


def test_jobs_must_be_positive(capsys):
    code, _, err = run_cli(capsys, "sumcheck", "--jobs", "0")
    assert code == 2
    assert "jobs" in err


def test_csv_and_human_formats(capsys):
    code, out, _ = run_cli(capsys, "sumcheck", "--sum", "sun_a", "--n-max",
                           "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "check,params,status,witness"
    code, out, _ = run_cli(capsys, "sumcheck", "--sum", "sun_a", "--n-max",
                           "3", "--format", "human")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_console_script_installed():
    exe = shutil.which("binomsum")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run([exe, "lemma", "--id", "2.4", "--m-max", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert "m=2" in proc.stdout


def test_usage_error_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "binomsum.cli"],
        capture_output=True, text=True)
    # no subcommand: argparse usage failure
    assert proc.returncode == 2
