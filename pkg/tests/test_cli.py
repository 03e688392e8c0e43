import json

from bmwade.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dims_e8_prints_the_big_number(capsys):
    code, out, _ = run(capsys, "dims", "--type", "E8")
    assert code == 0
    assert "41803776000" in out


def test_invalid_type_is_usage_error(capsys):
    code, out, err = run(capsys, "roots", "--type", "X9")
    assert code == 2
    assert "X9" in err


def test_unknown_flag_is_usage_error(capsys):
    code = main(["roots", "--type", "A2", "--bogus"])
    capsys.readouterr()
    assert code == 2


def test_verify_a2_all(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A2", "--suite", "all")
    assert code == 0
    assert "pass" in out and "FAIL" not in out


def test_verify_specialized_braid_e6(capsys):
    code, out, _ = run(capsys, "verify", "--type", "E6", "--suite", "braid",
                       "--specialize", "l=5/7,r=3/2")
    assert code == 0


def test_verify_generic_e6_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--type", "E6", "--suite", "braid")
    assert code == 2
    assert "specialized" in err


def test_roots_json_round_trip(capsys):
    code, out, _ = run(capsys, "roots", "--type", "D4", "--json")
    assert code == 0
    parsed = json.loads(out)
    assert json.dumps(parsed, sort_keys=True, indent=2) == out.rstrip("\n")
    assert parsed["c_nodes"] == [1, 3, 4]
    assert len(parsed["positive_roots"]) == 12


def test_deterministic_output(capsys):
    first = run(capsys, "verify", "--type", "A3", "--suite", "table1", "--json")
    second = run(capsys, "verify", "--type", "A3", "--suite", "table1", "--json")
    assert first == second
    parsed = json.loads(first[1])
    assert parsed["passed"] is True


def test_reduce_and_hbeta_and_tcoeff(capsys):
    code, out, _ = run(capsys, "reduce", "--type", "A2", "--word", "g1 g1")
    assert code == 0 and "e1" in out
    code, out, _ = run(capsys, "hbeta", "--type", "D4", "--root", "1,2,1,1", "--node", "1")
    assert code == 0 and out.strip() == "z1"
    code, out, _ = run(capsys, "tcoeff", "--type", "A2", "--node", "1", "--root", "1,1", "--json")
    assert code == 0
    assert json.loads(out)["terms"][0]["word"] == []


def test_reduce_bad_word_is_usage_error(capsys):
    code, _, err = run(capsys, "reduce", "--type", "A2", "--word", "g9")
    assert code == 2


def test_hbeta_invalid_pairing_is_usage_error(capsys):
    code, _, err = run(capsys, "hbeta", "--type", "A2", "--root", "1,0", "--node", "2")
    assert code == 2


def test_matrices_json_to_file(tmp_path, capsys):
    target = tmp_path / "a2.json"
    code, out, _ = run(capsys, "matrices", "--type", "A2", "--json", str(target))
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert data["size"] == 3
    assert set(data["sigma"]) == {"1", "2"}
    assert len(data["sigma"]["1"]) == 3  # column-major: one list per column


def test_matrices_theta_lk(capsys):
    code, out, _ = run(capsys, "matrices", "--type", "A2", "--theta", "lk", "--r", "3/2")
    assert code == 0
    data = json.loads(out)
    assert set(data["gamma"]) == {"1", "2"}


def test_cache_dir_round_trip(tmp_path, capsys):
    import bmwade.lkrep as lkrep

    args = ["--cache-dir", str(tmp_path), "tcoeff", "--type", "A3",
            "--node", "1", "--root", "1,1,1", "--json"]
    code, first, _ = run(capsys, *args)
    assert code == 0
    cache_file = tmp_path / "A3.tcoeff.json"
    assert cache_file.exists()
    lkrep.build_lk.cache_clear()
    code, second, _ = run(capsys, *args)
    assert code == 0 and first == second


def test_verify_a2dim_suite(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A2", "--suite", "a2dim")
    assert code == 0
    code, _, err = run(capsys, "verify", "--type", "A3", "--suite", "a2dim")
    assert code == 2
