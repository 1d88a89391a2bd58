#!/usr/bin/python3

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

import words
from cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, cli, run
from utils import render_json

GOLDEN = Path(__file__).parent / "golden"


def golden(name):
    return (GOLDEN / name).read_text(encoding="utf-8")


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_measure_golden(capsys):
    code, out, _ = invoke(capsys, "measure", "ABBACCBCCABAABC")
    assert code == EXIT_OK
    assert "rho=5" in out
    assert out == golden("measure_example.txt")


def test_arch_golden(capsys):
    code, out, _ = invoke(capsys, "arch", "ABBACCBCCABAABC")
    assert code == EXIT_OK
    assert out == golden("arch_example.txt")


def test_period_json_golden(capsys):
    code, out, _ = invoke(capsys, "period", "AABBCC", "--json")
    assert code == EXIT_OK
    assert out == golden("period_aabbcc.json")
    assert '"p":3' in out and '"T":5' in out and '"span":12' in out


@pytest.mark.parametrize("argv", [
    ["measure", "ABBACCBCCABAABC", "--json"],
    ["rtable", "ABBACCBCCABAABC", "--json"],
    ["rvector", "ABBACCBCCABAABC", "--json"],
    ["arch", "AABBCC", "--json"],
    ["pow", "AABBCC", "1000", "--json"],
    ["delta", "ABAB", "AABB", "--json"],
])
def test_json_round_trips(capsys, argv):
    code, out, _ = invoke(capsys, *argv)
    assert code == EXIT_OK
    line = out.rstrip("\n")
    assert render_json(json.loads(line)) == line


def test_global_flags_on_group(capsys):
    _, on_group, _ = invoke(capsys, "--json", "period", "AABBCC")
    _, on_command, _ = invoke(capsys, "period", "AABBCC", "--json")
    assert on_group == on_command


def test_measure_json_fields(capsys):
    _, out, _ = invoke(capsys, "measure", "CAACBABA", "--alphabet", "ABC", "--json")
    record = json.loads(out)
    assert list(record) == ["word", "alphabet", "h", "rho", "h_witness", "rho_witness"]
    assert (record["h"], record["rho"]) == (5, 3)


def test_measure_through_oracle(capsys):
    code, out, _ = invoke(capsys, "measure", "CAACBABA", "--alphabet", "ABC", "--oracle")
    assert code == EXIT_OK
    assert out == "word=CAACBABA h=5 rho=3 h_witness=- rho_witness=-\n"


def test_empty_word(capsys):
    code, out, _ = invoke(capsys, "measure", "ε", "--alphabet", "AB")
    assert code == EXIT_OK
    assert out == "word=ε h=1 rho=0 h_witness=- rho_witness=-\n"


def test_timing_only_on_request(capsys):
    _, plain, _ = invoke(capsys, "measure", "AB", "--json")
    assert "elapsed_us" not in json.loads(plain)
    _, timed, _ = invoke(capsys, "measure", "AB", "--json", "--timing")
    assert json.loads(timed)["elapsed_us"] >= 0
    _, text, _ = invoke(capsys, "measure", "AB", "--timing")
    assert " elapsed_us=" in text


def test_rtable_text(capsys):
    code, out, _ = invoke(capsys, "rtable", "ABBACCBCCABAABC")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "word=ABBACCBCCABAABC alphabet=ABC"
    assert "r(i,A): 0 1 1 1 2 1 1 1 1 1 2 2 3 4 4 3" in lines
    assert "l(i,A): 4 3 3 3 2 2 2 2 2 3 2 2 1 0 0 0" in lines


def test_rvector_text(capsys):
    _, out, _ = invoke(capsys, "rvector", "ABBACCBCCABAABC")
    lines = out.splitlines()
    assert lines[1] == "r-vector: 0 0 1 1 0 1 1 2 3 1 2 2 3 3 2"
    assert lines[2] == "l-vector: 3 4 3 2 4 3 2 2 1 2 1 1 0 0 0"


def test_arch_svg(capsys, tmp_path):
    target = tmp_path / "arcs.svg"
    code, _, _ = invoke(capsys, "arch", "ABBACCBCCABAABC", "--svg", str(target))
    assert code == EXIT_OK
    svg = target.read_text(encoding="utf-8")
    assert svg.startswith("<svg")
    assert svg.count('class="alpha"') == 3
    assert svg.count('class="beta"') == 3


def test_pow_verify(capsys):
    code, out, _ = invoke(capsys, "pow", "AABBCC", "10", "--verify", "--json")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["h"] == record["h_direct"]
    assert record["rho"] == record["rho_direct"]
    assert record["n"] == 10


def test_pow_largest_exponent(capsys):
    code, out, _ = invoke(capsys, "pow", "AABBCC", str(2 ** 63 - 1), "--json")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["n"] == 2 ** 63 - 1
    assert "h_direct" not in record


def test_pow_exponent_out_of_range(capsys):
    code, _, err = invoke(capsys, "pow", "AABBCC", str(2 ** 63))
    assert code == EXIT_USAGE
    assert err


def test_pow_missing_letter(capsys):
    code, out, err = invoke(capsys, "pow", "AAB", "3", "--alphabet", "ABC")
    assert code == EXIT_VALIDATION
    assert out == ""
    assert "missing: C" in err


def test_delta(capsys):
    _, out, _ = invoke(capsys, "delta", "ABAB", "AABB")
    assert out == "u=ABAB v=AABB delta=1\n"
    _, out, _ = invoke(capsys, "delta", "ABAB", "ABAB")
    assert out == "u=ABAB v=ABAB delta=INFINITE\n"
    _, out, _ = invoke(capsys, "delta", "ABABAB", "ABABABAB", "--kmax", "2")
    assert out == "u=ABABAB v=ABABABAB delta=EXCEEDS(2)\n"


def test_usage_errors(capsys):
    assert invoke(capsys, "frobnicate")[0] == EXIT_USAGE
    assert invoke(capsys, "measure")[0] == EXIT_USAGE
    assert invoke(capsys, "delta", "AB")[0] == EXIT_USAGE


def test_validation_errors(capsys):
    code, out, err = invoke(capsys, "measure", "ABC", "--alphabet", "AB")
    assert code == EXIT_VALIDATION
    assert out == ""
    assert "position 3" in err
    code, _, err = invoke(capsys, "measure", "AB C")
    assert code == EXIT_VALIDATION
    code, _, _ = invoke(capsys, "measure", "AB", "--alphabet", "AA")
    assert code == EXIT_VALIDATION


def test_budget_error(capsys, monkeypatch):
    monkeypatch.setattr(words, "DOWNSET_BUDGET", 10)
    code, _, err = invoke(capsys, "measure", "ABABABAB", "--oracle")
    assert code == EXIT_BUDGET
    assert "budget" in err


def test_input_file_continues_after_bad_line(capsys, tmp_path):
    source = tmp_path / "words.txt"
    source.write_text("ABBA\nAB?\n\nCAB\n", encoding="utf-8")
    code, out, err = invoke(capsys, "measure", "--input", str(source), "--alphabet", "ABC")
    assert code == EXIT_VALIDATION
    assert [line.split()[0] for line in out.splitlines()] == ["word=ABBA", "word=CAB"]
    assert "line 2:" in err


def test_input_with_word_argument_is_usage_error(capsys, tmp_path):
    source = tmp_path / "words.txt"
    source.write_text("AB\n", encoding="utf-8")
    assert invoke(capsys, "measure", "AB", "--input", str(source))[0] == EXIT_USAGE


def test_delta_input_pairs(capsys, tmp_path):
    source = tmp_path / "pairs.txt"
    source.write_text("ABAB AABB\nABAB\n", encoding="utf-8")
    code, out, err = invoke(capsys, "delta", "--input", str(source))
    assert code == EXIT_VALIDATION
    assert out == "u=ABAB v=AABB delta=1\n"
    assert "line 2:" in err


def test_pow_input_file(capsys, tmp_path):
    source = tmp_path / "words.txt"
    source.write_text("AABBCC\nABC\n", encoding="utf-8")
    code, out, _ = invoke(capsys, "pow", "4", "--input", str(source))
    assert code == EXIT_OK
    assert len(out.splitlines()) == 2


def test_standard_input():
    runner = CliRunner()
    result = runner.invoke(cli, ["measure", "--input", "-", "--json"], input="AB\nAAB\n")
    assert result.exit_code == EXIT_OK
    records = [json.loads(line) for line in result.stdout.splitlines()]
    assert [r["word"] for r in records] == ["AB", "AAB"]


def test_health_command(capsys):
    code, out, _ = invoke(capsys, "health", "--json")
    assert code == EXIT_OK
    status = json.loads(out)
    assert all(entry["status"] == "ok" for entry in status.values())
