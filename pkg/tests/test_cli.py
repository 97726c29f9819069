"""Command-line surface: subcommands, flags, exit codes."""

import json

import pytest

from collatz_parity.cli import main
from collatz_parity.report import TRAJECTORY_CSV_HEADER
from collatz_parity import char_set, ParityVector
from collatz_parity.report import charset_from_json_dict


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "1101001")
    assert code == 0
    assert '"P": "133"' in out
    # round trip: parse the JSON back into a characteristic set and re-check
    cs = charset_from_json_dict(json.loads(out))
    cs.check()
    assert cs == char_set(ParityVector.from_string("1101001"))


def test_analyze_rejects_garbage(capsys):
    code, _, err = run(capsys, "analyze", "1102")
    assert code == 1
    assert "error" in err


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "1011010111", "--count", "5")
    assert code == 0
    assert [int(line) for line in out.split()] == [313, 1337, 2361, 3385, 4409]


def test_solve_count_validation(capsys):
    code, _, err = run(capsys, "solve", "11", "--count", "0")
    assert code == 1


def test_xstar_table(capsys):
    code, out, _ = run(capsys, "xstar", "1011010111")
    assert code == 0
    assert "Xstar = 4409" in out and "Ystar = 9422" in out and "J = 1214" in out


def test_xstar_json(capsys):
    code, out, _ = run(capsys, "xstar", "1011010111", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["Xstar"] == "4409"
    assert [r["theta"] for r in d["rows"]] == ["341", "199", "109", "15", "5", "3", "1"]


def test_trajectory_streams_csv(capsys):
    code, out, _ = run(capsys, "trajectory", "int:7", "--horizon", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == TRAJECTORY_CSV_HEADER
    assert len(lines) == 9


def test_trajectory_deterministic(capsys):
    _, out1, _ = run(capsys, "trajectory", "head:1101;cycle:01", "--horizon", "40")
    _, out2, _ = run(capsys, "trajectory", "head:1101;cycle:01", "--horizon", "40")
    assert out1 == out2


def test_trajectory_exact_rationals(capsys):
    code, out, _ = run(capsys, "trajectory", "int:7", "--horizon", "3",
                       "--exact-rationals")
    assert code == 0
    assert "7/8" in out


def test_trajectory_out_file(capsys, tmp_path):
    path = tmp_path / "rows.csv"
    code, out, _ = run(capsys, "trajectory", "int:27", "--horizon", "5",
                       "--out", str(path))
    assert code == 0 and out == ""
    lines = path.read_text().splitlines()
    assert lines[0] == TRAJECTORY_CSV_HEADER and len(lines) == 6


def test_classify_growing(capsys):
    code, out, _ = run(capsys, "classify", "cycle:100", "--horizon", "40",
                       "--window", "10")
    assert code == 0
    assert "verdict: growing" in out
    assert "horizon-bounded" in out


def test_classify_stabilized_json(capsys):
    code, out, _ = run(capsys, "classify", "int:27", "--horizon", "80",
                       "--window", "20", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["kind"] == "stabilized" and d["candidate"] == "27"
    assert "horizon-bounded" in d["note"]
    assert d["diagnostics"]["final_j"] == 80


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "0 failed" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--json")
    assert code == 0
    results = json.loads(out)
    assert all(r["ok"] for r in results)
    assert len(results) >= 14


def test_verify_failure_exit_code(capsys, tmp_path):
    path = tmp_path / "fixtures.jsonl"
    path.write_text('{"id": "bad", "kind": "n0", "input": "101110", '
                    '"expected": "8", "source": "made up"}\n')
    code, out, _ = run(capsys, "verify", "--fixtures", str(path))
    assert code == 2
    assert "FAIL bad" in out


def test_usage_error_exit_64(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 64


def test_domain_error_exit_1(capsys):
    code, _, err = run(capsys, "trajectory", "cycle:102", "--horizon", "5")
    assert code == 1
    assert "error" in err
