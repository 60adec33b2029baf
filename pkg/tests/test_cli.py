import json

import pytest

from cubicmw.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_writes_points(tmp_path, capsys):
    out = tmp_path / "pts.txt"
    code, stdout, _ = run(
        capsys, "enumerate", "--coeffs", "1,2,3,4", "--height", "60", "--out", str(out)
    )
    assert code == 0
    assert "wrote" in stdout
    lines = out.read_text().splitlines()
    assert lines[0] == "# coeffs: 1 2 3 4"
    assert lines[1] == "# height: 60"
    body = [l for l in lines if not l.startswith("#")]
    assert body[0] == "1 0 1 -1"


def test_enumerate_deterministic_across_threads(tmp_path, capsys):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    for path, threads in ((a, "1"), (b, "4")):
        code, _, _ = run(
            capsys, "enumerate", "--coeffs", "1,2,3,4", "--height", "120",
            "--out", str(path), "--threads", threads,
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_compose_example(capsys):
    code, stdout, _ = run(
        capsys, "compose", "--coeffs", "1,2,3,4", "--x", "1,0,1,-1", "--y", "1,1,-1,0"
    )
    assert code == 0
    assert stdout.strip() == "3 1 1 -2"


def test_compose_domain_error_exit_code(capsys):
    code, _, stderr = run(
        capsys, "compose", "--coeffs", "1,2,3,4", "--x", "1,1,1,1", "--y", "1,0,1,-1"
    )
    assert code == 1
    assert stderr.startswith("error: NotOnSurface")


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--coeffs", "1,2,3,4"])  # missing --height/--out
    assert exc.value.code == 2


def test_decompose_report(tmp_path, capsys):
    pts = tmp_path / "pts.txt"
    report = tmp_path / "report.json"
    run(capsys, "enumerate", "--coeffs", "1,2,3,4", "--height", "120", "--out", str(pts))
    code, stdout, _ = run(
        capsys, "decompose", "--points", str(pts), "--coeffs", "1,2,3,4",
        "--report", str(report),
    )
    assert code == 0
    payload = json.loads(report.read_text())
    total = payload["points"]
    assert stdout.startswith(f"points={total} ")
    assert total == (
        payload["strong_count"] + payload["weak_only_count"] + payload["generator_count"]
    )
    assert payload["config"]["coeffs"] == [1, 2, 3, 4]


def test_verify_relations(capsys):
    code, stdout, _ = run(
        capsys, "verify-relations", "--height", "60", "--trials", "200"
    )
    assert code == 0
    assert "involution" in stdout and "0 failed" in stdout


def test_split_demo(capsys):
    code, stdout, _ = run(capsys, "split-demo", "--samples", "10", "--seed", "3")
    assert code == 0
    assert "surface:" in stdout
    assert "10 agreed" in stdout


def test_plane_closure_fp(capsys):
    code, stdout, _ = run(capsys, "plane-closure", "--field", "fp:7")
    assert code == 0
    assert "closure size 57" in stdout


def test_plane_closure_q_requires_cap(capsys):
    code, _, stderr = run(capsys, "plane-closure", "--field", "q")
    assert code == 1
    assert "error: DegenerateSeeds" in stderr
