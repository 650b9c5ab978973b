import json

from cosetcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cosets_text(capsys):
    code, out, _ = run(capsys, "cosets", "--q", "4", "--n", "51")
    assert code == 0
    assert out.count("{") == 15
    assert "{1,4,13,16}" in out


def test_cosets_json(capsys):
    code, out, _ = run(capsys, "cosets", "--q", "4", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["{0}  {1}  {2}"]
    code, out, _ = run(capsys, "cosets", "--q", "4", "--n", "21", "--format", "json")
    obj = json.loads(out)
    assert obj["cosets"][1] == [1, 4, 16]


def test_classical_with_certification(capsys):
    code, out, _ = run(capsys, "classical", "--q", "4", "--n", "51",
                       "--r", "16", "--certify")
    assert code == 0
    assert "[52, 5, >=36]" in out
    assert "exact d = 36" in out


def test_classical_family_trivial(capsys):
    code, out, _ = run(capsys, "classical", "--q", "4", "--n", "51",
                       "--family", "0")
    assert code == 0
    assert "[52, 1, >=52]" in out


def test_classical_csv_schema(capsys):
    code, out, _ = run(capsys, "classical", "--q", "4", "--n", "63",
                       "--r", "21", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "q,ell,n,block_length,k_or_quantum_k,d_lower,d_exact,S_representatives"
    assert lines[1] == "4,,63,64,8,43,,0 1 5 21"


def test_classical_budget_fallback(capsys, monkeypatch):
    monkeypatch.setenv("COSETCODES_BUDGET", "10")
    code, out, _ = run(capsys, "classical", "--q", "4", "--n", "51",
                       "--r", "17", "--certify")
    assert code == 0
    assert "bound only" in out
    assert "exact d" not in out


def test_quantum_fixture(capsys):
    code, out, _ = run(capsys, "quantum", "--q", "4", "--ell", "2",
                       "--n", "21", "--family", "0,1,2,3")
    assert code == 0
    assert "[[22, 2, >=6]]" in out
    assert "self_orthogonal=True" in out


def test_quantum_rejection_names_pair(capsys):
    code, out, err = run(capsys, "quantum", "--q", "4", "--ell", "2",
                         "--n", "21", "--family", "0,7")
    assert code == 1
    assert "S_7" in err


def test_quantum_json_schema(capsys):
    code, out, _ = run(capsys, "quantum", "--q", "4", "--ell", "2",
                       "--n", "51", "--family", "0,1,2,6", "--format", "json")
    obj = json.loads(out)
    assert obj["quantum_k"] == 26 and obj["d_lower"] == 6
    assert obj["field"]["modulus"] == [1, 0, 1, 1, 1, 0, 0, 0, 1]


def test_search_text_and_exit(capsys):
    code, out, _ = run(capsys, "search", "--q", "16", "--ell", "4", "--n", "51")
    assert code == 0
    assert "[[52, 38, >=5]]" in out
    assert "[[52, 14, >=12]]" in out


def test_search_objective_requires_target(capsys):
    code, _, err = run(capsys, "search", "--q", "4", "--ell", "2", "--n", "21",
                       "--objective", "max_k_given_d")
    assert code == 2
    assert "target" in err


def test_ell_q_mismatch_is_usage_error(capsys):
    code, _, err = run(capsys, "quantum", "--q", "4", "--ell", "3",
                       "--n", "21", "--family", "0")
    assert code == 2


def test_matrix_export_and_recheck(tmp_path, capsys):
    path = tmp_path / "m.json"
    code, _, _ = run(capsys, "matrix", "--q", "4", "--n", "51", "--r", "16",
                     "-o", str(path))
    assert code == 0
    code, out, _ = run(capsys, "recheck", str(path))
    assert code == 0
    assert "ok" in out
    # corrupt one entry: recheck must fail
    obj = json.loads(path.read_text())
    obj["entries"][5] = (obj["entries"][5] + 1) % 4
    path.write_text(json.dumps(obj))
    code, _, err = run(capsys, "recheck", str(path))
    assert code != 0


def test_outputs_are_deterministic(capsys):
    _, out1, _ = run(capsys, "quantum", "--q", "4", "--ell", "2", "--n", "51",
                     "--family", "0,1,2,6", "--format", "json")
    _, out2, _ = run(capsys, "quantum", "--q", "4", "--ell", "2", "--n", "51",
                     "--family", "0,1,2,6", "--format", "json")
    assert out1 == out2


def test_verify_skip_certify(capsys):
    code, out, _ = run(capsys, "verify", "--skip-certify")
    assert code == 0
    assert "0 failed" in out
    assert "[INFO]" in out  # the published-exceeding-bound entries


def test_verify_catches_corrupted_fixture(capsys, monkeypatch):
    from cosetcodes import fixtures

    data = fixtures.load_known_answers()
    data["orders"][0] = [4, 51, 5]  # wrong on purpose
    monkeypatch.setattr(fixtures, "load_known_answers", lambda: data)
    code, out, _ = run(capsys, "verify", "--skip-certify")
    assert code == 1
    assert "[FAIL] order of 4 mod 51" in out
