import json


from pi1lines.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_pairs(capsys, corpus_dir):
    assert run(capsys, "pairs", corpus_dir / "triangle.txt")[:2] == (0, "n=3\n[1,2] [2,3] [1,2]\n")
    assert run(capsys, "pairs", corpus_dir / "pencil-3.txt")[:2] == (0, "n=3\n[1,3]\n")


def test_malformed_input(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\n")
    code, _, err = run(capsys, "pairs", bad)
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "pi1", tmp_path / "missing.txt")
    assert code == 2


def test_pi1(capsys, corpus_dir, tmp_path):
    code, out, _ = run(capsys, "pi1", corpus_dir / "pencil-3.txt", "--projective")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "gens: 3" and len(lines) == 4 and "3 2 1" in lines
    code, out, _ = run(capsys, "pi1", corpus_dir / "single-line.txt", "--affine")
    assert out == "gens: 1\n"
    code, out, _ = run(capsys, "pi1", corpus_dir / "triangle.txt", "--affine", "--format", "json")
    data = json.loads(out)
    assert data["schema"] == 1 and data["gens"] == 3 and len(data["relators"]) == 3


def test_pairs_mode_matches_geometry(capsys, corpus_dir, tmp_path):
    for name in ("triangle", "two-triple-points", "near-pencil-5"):
        _, pairs_out, _ = run(capsys, "pairs", corpus_dir / f"{name}.txt")
        pfile = tmp_path / f"{name}.pairs"
        pfile.write_text(pairs_out)
        for flags in (["--affine"], ["--projective"], ["--transversal"]):
            geo = run(capsys, "pi1", corpus_dir / f"{name}.txt", *flags)[1]
            assert run(capsys, "pi1", pfile, *flags)[1] == geo
    geo = run(capsys, "pi1", corpus_dir / "triangle.txt")[1]
    assert run(capsys, "pi1", corpus_dir / "triangle.pairs")[1] == geo


def test_verify(capsys, corpus_dir):
    code, out, _ = run(capsys, "verify", corpus_dir / "triangle.txt")
    assert code == 0 and out.startswith("verdict: success")
    code, out, _ = run(capsys, "verify", corpus_dir / "pencil-5.txt", "--format", "json")
    assert code == 0 and json.loads(out)["verdict"] == "success"
    code, out, _ = run(capsys, "verify", corpus_dir / "parallels.txt")
    assert code == 0 and "degraded" in out and "warning" in out


def test_verify_many_with_jobs(capsys, corpus_dir):
    files = [corpus_dir / f"{n}.txt" for n in ("triangle", "pencil-4", "generic-5")]
    code, out, _ = run(capsys, "verify", *files, "--jobs", "2", "--format", "json")
    assert code == 0
    assert [json.loads(l)["verdict"] for l in out.splitlines()] == ["success"] * 3


def test_fan_abelianize_compare(capsys, corpus_dir):
    code, out, _ = run(capsys, "fan", corpus_dir / "pencil-4.txt")
    assert code == 0 and "applicable: yes" in out and "r=0" in out and "projective: F3" in out
    assert run(capsys, "abelianize", corpus_dir / "triangle.txt", "--affine")[1] == "Z^3\n"
    assert run(capsys, "abelianize", corpus_dir / "triangle.txt", "--projective")[1] == "Z^2\n"
    code, out, _ = run(capsys, "compare", corpus_dir / "pencil-4.txt", corpus_dir / "generic-4.txt")
    assert code == 10 and "invariants distinguish" in out
    code, _, _ = run(capsys, "compare", corpus_dir / "triangle.txt", corpus_dir / "triangle.txt")
    assert code == 0


def test_braid(capsys, corpus_dir):
    code, out, _ = run(capsys, "braid", corpus_dir / "triangle.txt")
    assert code == 0
    assert out.splitlines()[4] == "p3 [1,2]: s2 s1"
    data = json.loads(run(capsys, "braid", corpus_dir / "triangle.txt", "--format", "json")[1])
    assert data["entries"][2]["braid"] == [2, 1]


def test_oka(capsys, tmp_path, corpus_dir):
    line = tmp_path / "line.txt"
    line.write_text("1 1 -1\n")
    code, out, _ = run(capsys, "oka", corpus_dir / "pencil-3.txt", line)
    assert code == 0 and "relatorsMatch: True" in out
    code, _, _ = run(capsys, "oka", corpus_dir / "pencil-3.txt", corpus_dir / "pencil-4.txt")
    assert code == 2


def test_deterministic(capsys, corpus_dir):
    outs = {run(capsys, "verify", corpus_dir / "two-triple-points.txt", "--format", "json")[1] for _ in range(3)}
    assert len(outs) == 1
