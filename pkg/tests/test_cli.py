import json

import pytest

from fuzzyrel.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def usage_error(capsys, *argv) -> str:
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    assert exc.value.code == 2
    return capsys.readouterr().err


# eval
def test_eval_text(capsys, sets_file):
    code, out, _ = run(capsys, "eval", "--sets", str(sets_file), "--expr", "A [+] B")
    assert code == 0
    assert out.splitlines() == ["A [+] B", "  x1  0.7", "  x2  1"]


def test_eval_json(capsys, sets_file):
    code, out, _ = run(capsys, "eval", "--sets", str(sets_file), "--expr", "A.*B", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["expr"] == "A .* B"
    assert payload["universe"] == ["x1", "x2"]
    assert payload["degrees"] == pytest.approx({"x1": 0.1, "x2": 0.35})


@pytest.mark.parametrize("expr", ["A [+] C", "A [/] Z", "A [?] B", "A |"])
def test_eval_input_errors(capsys, sets_file, expr):
    code, out, err = run(capsys, "eval", "--sets", str(sets_file), "--expr", expr)
    assert code == 1
    assert out == ""
    assert err.startswith("❌")


def test_eval_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "eval", "--sets", str(tmp_path / "nope.json"), "--expr", "A")
    assert code == 1 and "❌" in err


def test_eval_strict_quotient(capsys, tmp_path):
    path = tmp_path / "sets.json"
    path.write_text(json.dumps({"universe": ["u", "v"], "sets": {"A": {"u": 0.5, "v": 0.5}, "B": {"u": 0, "v": 1}}}))
    code, out, _ = run(capsys, "eval", "--sets", str(path), "--expr", "A [/] B")
    assert code == 0 and "  u  1" in out.splitlines()
    code, _, _ = run(capsys, "eval", "--sets", str(path), "--expr", "A [/] B", "--quotient-mode", "strict")
    assert code == 1


# check
def test_check_holds(capsys):
    code, out, err = run(capsys, "check", "A .* B <= A & B")
    assert code == 0
    assert out.startswith("adhoc [grid, step 0.05] HOLDS")
    assert "✅" in err


def test_check_violation(capsys):
    code, out, err = run(capsys, "check", "A <= A.*A")
    assert code == 3
    assert "  violation: a=0.05  lhs=0.05 rhs=0.0025" in out.splitlines()
    assert "❌" in err


def test_check_input_error(capsys):
    code, out, err = run(capsys, "check", "A <=")
    assert code == 1
    assert out == ""
    assert err.startswith("❌")


@pytest.mark.parametrize("statement", ["1e400 * A <= X", "A^1e400 <= X"])
def test_check_rejects_out_of_range_numbers(capsys, statement):
    code, out, err = run(capsys, "check", statement)
    assert code == 1
    assert out == ""
    assert "out of range" in err


def test_check_with_hypothesis_and_equality_claim(capsys):
    code, out, _ = run(capsys, "check", "0.5*(A[+]B) >= (A.*B)^0.5", "--given", "a*b <= 0.25",
                       "--equality-iff", "a = b", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert [r["mode"] for r in payload["reports"]] == ["grid", "equality"]
    assert payload["summary"] == {"checks": 2, "holds": 2, "violated": 0, "errors": 0}
    assert "elapsed_ms" not in payload["reports"][0]


def test_check_given_spellings_agree(capsys):
    _, repeated, _ = run(capsys, "check", "A [+] B <= X", "--given", "a <= 0.5", "--given", "b <= 0.5")
    _, joined, _ = run(capsys, "check", "--statement", "A [+] B <= X", "--given", "a <= 0.5, b <= 0.5")
    assert repeated == joined


def test_check_random_samples(capsys):
    code, out, _ = run(capsys, "check", "A <= A.*A", "--samples", "50", "--seed", "3", "--format", "json")
    assert code == 3
    report = json.loads(out)["reports"][0]
    assert report["generator"] == "mt19937" and report["seed"] == 3
    assert report["examined"] == 50


def test_check_timings(capsys):
    _, out, _ = run(capsys, "check", "A <= X", "--timings")
    assert "  elapsed: " in out


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "A <= X", "--tolerance", "0"],
        ["check", "A <= X", "--tolerance", "0.01"],
        ["check", "A <= X", "--resolution", "0.03"],
        ["check", "A <= X", "--resolution", "1e10"],
        ["check", "A <= X", "--resolution", "inf"],
        ["check", "A <= X", "--wide-resolution", "1e10"],
        ["check", "A <= X", "--max-findings", "0"],
        ["check", "A <= X", "--workers", "0"],
        ["check", "A <= X", "--samples", "0"],
        ["check", "A <= X", "--log-level", "chatty"],
        ["check", "A <= X", "--statement", "A <= X"],
        ["check"],
    ],
)
def test_check_usage_errors(capsys, argv):
    usage_error(capsys, *argv)


def test_workers_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("FUZZYREL_WORKERS", "abc")
    assert "FUZZYREL_WORKERS" in usage_error(capsys, "check", "A <= X")


# theorems
def test_theorems_list(capsys):
    code, out, _ = run(capsys, "theorems", "list")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["ID", "KIND", "PARAMS", "TITLE"]
    assert len(lines) == 30
    assert lines[-1].startswith("S6")


def test_theorems_check(capsys):
    code, out, err = run(capsys, "theorems", "check", "T9")
    assert code == 0
    assert out.startswith("T9 [grid, step 0.1] HOLDS")
    assert "🔎 2 check(s): 2 hold, 0 violated, 0 error(s)" in err


def test_theorems_check_with_parameter(capsys):
    code, out, _ = run(capsys, "theorems", "check", "T10", "--m", "3")
    assert code == 0
    assert out.startswith("T10 [grid, step 0.05, m=3] HOLDS")


def test_theorems_check_bad_parameter(capsys):
    code, _, err = run(capsys, "theorems", "check", "T10", "--m", "0")
    assert code == 1 and "❌" in err


def test_theorems_check_existence_entry_with_samples(capsys):
    code, out, _ = run(capsys, "theorems", "check", "P1", "--samples", "50")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "P1 [witness, step 0.05] HOLDS"
    assert "  examined 2" in lines
    assert "  note: existence claims are checked by witness search on the grid; --samples ignored" in lines


def test_theorems_unknown_id(capsys):
    code, out, err = run(capsys, "theorems", "check", "T99")
    assert code == 2
    assert out == "" and "T99" in err


def test_theorems_usage_errors(capsys):
    usage_error(capsys, "theorems", "check")
    usage_error(capsys, "theorems", "list", "T1")
    usage_error(capsys, "theorems", "prove", "T1")


def test_theorems_export(capsys):
    code, out, _ = run(capsys, "theorems", "export")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 29
    assert records[0]["id"] == "T1"


def test_check_all_is_worker_independent(capsys, monkeypatch):
    argv = ["theorems", "check-all", "--format", "json", "--resolution", "0.1", "--wide-resolution", "0.2"]
    code, serial, _ = run(capsys, *argv)
    assert code == 0
    monkeypatch.setenv("FUZZYREL_WORKERS", "2")
    code, parallel, _ = run(capsys, *argv)
    assert code == 0
    assert serial == parallel
    summary = json.loads(serial)["summary"]
    assert summary["violated"] == 0 and summary["errors"] == 0


# hunt
def test_hunt_violation(capsys):
    code, out, _ = run(capsys, "hunt", "(A[-]B)[+](B[-]A) == O")
    assert code == 3
    lines = out.splitlines()
    assert lines[0] == "adhoc [violation, step 0.05]: 420 violation(s)"
    assert lines[1] == "  a=0 b=0.05  lhs=0.05 rhs=0"


def test_hunt_nothing_found(capsys):
    code, out, _ = run(capsys, "hunt", "T2a")
    assert code == 0
    assert out == "T2a [violation, step 0.05]: none found at resolution 0.05\n"


def test_hunt_equality_necessity(capsys):
    code, out, _ = run(capsys, "hunt", "T2a", "--mode", "equality-necessity")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("T2a [equality-necessity, step 0.05]: ")
    assert lines[0].endswith("equality point(s) outside the claimed condition")
    assert lines[1] == "  a=0 b=0 c=0  lhs=0 rhs=0"


def test_hunt_necessity_findings_cap(capsys):
    argv = ["hunt", "T2a", "--mode", "equality-necessity", "--max-findings", "5000", "--format", "json"]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    [report] = json.loads(out)["reports"]
    samples = {tuple(s["point"]): s for s in report["necessity_findings"]["samples"]}
    assert samples[(0.5, 0.2, 0.2)]["lhs"] == pytest.approx(0.2)
    assert samples[(0.5, 0.2, 0.2)]["rhs"] == pytest.approx(0.2)


def test_hunt_existence_entry(capsys):
    code, out, _ = run(capsys, "hunt", "P1")
    assert code == 0
    assert out == "P1 [witness, step 0.05]: a=0 b=0.05  value=0.05\n"
    code, sampled, _ = run(capsys, "hunt", "P1", "--samples", "50")
    assert code == 0 and sampled == out


def test_hunt_errors(capsys):
    code, _, _ = run(capsys, "hunt", "T11", "--mode", "equality-necessity")
    assert code == 1
    code, _, _ = run(capsys, "hunt", "T99")
    assert code == 2
    usage_error(capsys, "hunt", "T2a", "--given", "a <= 1")
    usage_error(capsys, "hunt", "L1", "--mode", "equality-necessity")
    usage_error(capsys, "hunt", "T2a", "--mode", "equality-necessity", "--samples", "10")


# top level
def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("fuzzyrel ")


def test_no_command_prints_help(capsys):
    code, out, _ = run(capsys)
    assert code == 0
    assert "theorems" in out


def test_subcommand_help(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "--help"])
    assert exc.value.code == 0
    assert "--given" in capsys.readouterr().out
