import json

from involutive.bench import run_bench
from involutive.cli import main

EX9_TEXT = "x^2*y - 1\nx*y^2 - 1\ny^4 - 1\n"
STAIRCASE_TEXT = "x^2\nx*y\nz\n"


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_complete_golden(tmp_path, capsys):
    src = _write(tmp_path, "stair.txt", STAIRCASE_TEXT)
    code = main(["complete", src, "--vars", "x,y,z", "--division", "janet"])
    out = capsys.readouterr().out
    assert code == 0
    assert out == "z\nx*z\nx*y\nx^2\n# status: complete steps: 1\n"


def test_complete_cap_exceeded_exit_code(tmp_path, capsys):
    src = _write(tmp_path, "stair.txt", STAIRCASE_TEXT)
    code = main(["complete", src, "--vars", "x,y,z", "--division", "pommaret", "--cap", "50"])
    out = capsys.readouterr().out
    assert code == 2
    assert "# status: cap_exceeded steps: 50" in out


def test_basis_minimal_golden(tmp_path, capsys):
    src = _write(tmp_path, "ex9.txt", EX9_TEXT)
    code = main(["basis", src, "--vars", "x,y", "--division", "janet", "--order", "lex"])
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert out[:2] == ["y - 1", "x - 1"]
    assert "# status: complete" in out
    assert "# algorithm: minimal" in out


def test_basis_involutive_nine_elements(tmp_path, capsys):
    src = _write(tmp_path, "ex9.txt", EX9_TEXT)
    code = main(
        ["basis", src, "--vars", "x,y", "--division", "janet", "--order", "lex", "--algorithm", "involutive"]
    )
    out = capsys.readouterr().out.splitlines()
    polys = [line for line in out if not line.startswith("#")]
    assert code == 0
    assert len(polys) == 9
    assert polys[0] == "y - 1"
    assert polys[-1] == "x^2*y - 1"


def test_basis_verify_flag(tmp_path, capsys):
    src = _write(tmp_path, "ex9.txt", EX9_TEXT)
    code = main(["basis", src, "--vars", "x,y", "--order", "lex", "--verify"])
    out = capsys.readouterr().out
    assert code == 0
    assert "# verify groebner: ok" in out
    assert "# verify same-ideal: ok" in out
    assert "# verify involutive: ok" in out


def test_basis_buchberger(tmp_path, capsys):
    src = _write(tmp_path, "ex9.txt", EX9_TEXT)
    code = main(["basis", src, "--vars", "x,y", "--order", "lex", "--algorithm", "buchberger", "--verify"])
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert out[:2] == ["y - 1", "x - 1"]
    assert "# algorithm: buchberger" in out


def test_parse_error_exit_code(tmp_path, capsys):
    src = _write(tmp_path, "bad.txt", "x^-1\n")
    code = main(["basis", src, "--vars", "x,y"])
    err = capsys.readouterr().err
    assert code == 3
    assert "line 1" in err


def test_unknown_variable_exit_code(tmp_path, capsys):
    src = _write(tmp_path, "bad.txt", "x + q\n")
    code = main(["basis", src, "--vars", "x,y"])
    assert code == 3


def test_check_detects_incomplete_basis(tmp_path, capsys):
    src = _write(tmp_path, "stair.txt", STAIRCASE_TEXT)
    code = main(["check", src, "--vars", "x,y,z", "--division", "janet"])
    out = capsys.readouterr().out
    assert code == 4
    assert "involutive: FAIL" in out
    assert "witness" in out
    assert "groebner" in out


def test_check_accepts_complete_basis(tmp_path, capsys):
    src = _write(tmp_path, "full.txt", "x^2\nx*y\nz\nx*z\n")
    code = main(["check", src, "--vars", "x,y,z", "--division", "janet"])
    out = capsys.readouterr().out
    assert code == 0
    assert out == "involutive: ok\ngroebner: ok\n"


def test_records_format(tmp_path, capsys):
    src = _write(tmp_path, "ex9.txt", EX9_TEXT)
    code = main(
        ["basis", src, "--vars", "x,y", "--order", "lex", "--division", "janet", "--format", "records"]
    )
    out = capsys.readouterr().out
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 2
    assert list(records[0]) == ["polynomial", "lm", "multiplicative", "nonmultiplicative"]
    assert records[0]["polynomial"] == "y - 1"
    assert records[1]["lm"] == "x"
    for r in records:
        assert sorted(r["multiplicative"] + r["nonmultiplicative"]) == ["x", "y"]


def test_output_bytes_deterministic(tmp_path):
    src = _write(tmp_path, "ex9.txt", EX9_TEXT)
    out_a = tmp_path / "a.txt"
    out_b = tmp_path / "b.txt"
    for out in (out_a, out_b):
        code = main(
            ["basis", src, "--vars", "x,y", "--order", "lex", "--algorithm", "involutive", "-o", str(out)]
        )
        assert code == 0
    assert out_a.read_bytes() == out_b.read_bytes()


def test_stdin_input(tmp_path, capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("x - 1\n"))
    code = main(["basis", "-", "--vars", "x,y"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[0] == "x - 1"


def test_bench_builtin_corpus(capsys):
    code = main(["bench", "--cap", "400", "--divisions", "janet,division2"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("case")
    assert any("binomial-lex" in line for line in lines)
    assert any(line.startswith("# fastest complete for") for line in lines)


def test_bench_empty_corpus(tmp_path, capsys):
    code = main(["bench", str(tmp_path)])
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert len(out) == 1 and out[0].startswith("case")


def test_bench_records_format(capsys):
    code = main(["bench", "--cap", "400", "--divisions", "janet", "--algorithms", "minimal", "--format", "records"])
    out = capsys.readouterr().out
    assert code == 0
    for line in out.splitlines():
        record = json.loads(line)
        assert record["division"] == "janet"
        assert record["algorithm"] == "minimal"


def test_bench_rejects_unknown_algorithm(capsys):
    code = main(["bench", "--algorithms", "magic"])
    assert code == 1


def test_minimal_basis_never_larger_than_involutive():
    records = run_bench(cap=600)
    by_key = {(r.case, r.division, r.algorithm): r for r in records}
    for (case, division, algorithm), r in by_key.items():
        if algorithm != "involutive" or r.status != "complete":
            continue
        minimal = by_key.get((case, division, "minimal"))
        if minimal is not None and minimal.status == "complete":
            assert minimal.basis_size <= r.basis_size, (case, division)
