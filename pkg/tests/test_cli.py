"""End-to-end command-line behavior: JSON documents, exit codes,
determinism, and file output."""

import json

import pytest

from genvar import cli
from genvar.errors import ConsistencyError
from genvar.quiver import kronecker


@pytest.fixture()
def quiver_file(tmp_path):
    path = tmp_path / "kron.json"
    path.write_text(json.dumps(kronecker().to_json()), encoding="utf-8")
    return str(path)


def run_cli(capsys, argv):
    rc = cli.main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_generic_var_document(quiver_file, capsys):
    rc, out, err = run_cli(
        capsys, ["--quiver", quiver_file, "generic-var", "--d", "2,1"])
    assert rc == 0 and err == ""
    doc = json.loads(out)
    assert doc["command"] == "generic-var"
    assert doc["inputs"]["d"] == [2, 1]
    assert doc["results"]["den"] == [2, 1]
    assert doc["results"]["rigid"] is True
    cert = doc["certificates"]["generic"]
    assert cert["summands"] == [
        {"vector": [2, 1], "multiplicity": 1, "kind": "real_schur"}]


def test_unparsable_vector_exits_2(quiver_file, capsys):
    rc, out, err = run_cli(
        capsys, ["--quiver", quiver_file, "generic-var", "--d", "2,x"])
    assert rc == 2
    assert "input error" in err
    assert out == ""


def test_missing_quiver_exits_2(capsys):
    rc, _out, err = run_cli(capsys, ["generic-var", "--d", "1,1"])
    assert rc == 2 and "--quiver" in err


def test_wrong_vector_length_exits_2(quiver_file, capsys):
    rc, _out, err = run_cli(
        capsys, ["--quiver", quiver_file, "generic-var", "--d", "1,2,3"])
    assert rc == 2 and "input error" in err


def test_bad_prime_pool_exits_2(quiver_file, capsys):
    rc, _out, err = run_cli(
        capsys, ["--quiver", quiver_file, "--primes", "1,5",
                 "generic-var", "--d", "1,0"])
    assert rc == 2 and "input error" in err


def test_tiny_budget_exits_3(quiver_file, tmp_path, capsys):
    rep = {"dim": [2, 2], "matrices": [[[1, 0], [0, 1]], [[0, 0], [1, 0]]]}
    path = tmp_path / "rep.json"
    path.write_text(json.dumps(rep), encoding="utf-8")
    rc, out, err = run_cli(
        capsys, ["--quiver", quiver_file, "--budget", "1",
                 "cc-map", "--rep", str(path)])
    assert rc == 3
    assert "budget exceeded" in err
    assert out == ""


def test_consistency_failure_exits_4(capsys, monkeypatch):
    def boom(*_a, **_k):
        raise ConsistencyError("forced for the exit-code test")
    monkeypatch.setattr(cli.kronecker, "base_change", boom)
    rc, _out, err = run_cli(
        capsys, ["base-change", "--source", "G", "--target", "SZ",
                 "--size", "3"])
    assert rc == 4 and "consistency failure" in err


def test_selftest_single_criterion(capsys):
    rc, out, _err = run_cli(capsys, ["selftest", "--criteria", "9"])
    assert rc == 0
    lines = out.splitlines()
    assert any(line.startswith("criterion 09 PASS") for line in lines)
    start = next(i for i, line in enumerate(lines) if line.startswith("{"))
    doc = json.loads("\n".join(lines[start:]))
    assert doc["results"]["passed"] is True
    assert [r["criterion"] for r in doc["results"]["reports"]] == [9]


def test_selftest_failure_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(
        cli.acceptance, "run_all",
        lambda selected=None, echo=print: (False, [{"criterion": 1,
                                                    "passed": False}]))
    rc, _out, _err = run_cli(capsys, ["selftest", "--criteria", "1"])
    assert rc == 1


def test_determinism_and_out_file(quiver_file, tmp_path, capsys):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    for target in (first, second):
        rc, out, _err = run_cli(
            capsys, ["--quiver", quiver_file, "--out", str(target),
                     "generic-var", "--d", "2,2"])
        assert rc == 0
        assert out == ""          # document goes to the file, not stdout
    assert first.read_bytes() == second.read_bytes()
    doc = json.loads(first.read_text(encoding="utf-8"))
    assert doc["results"]["den"] == [2, 2]
    assert doc["results"]["rigid"] is False


def test_mutation_table_document(quiver_file, capsys):
    rc, out, _err = run_cli(
        capsys, ["--quiver", quiver_file, "mutate-enumerate",
                 "--depth", "3", "--sweeps", "2"])
    assert rc == 0
    doc = json.loads(out)
    dens = [v["den"] for v in doc["results"]["variables"]]
    assert [-1, 0] in dens and [2, 1] in dens
    assert doc["results"]["laurent_check"]["all_coefficients_positive"] is True


def test_cc_map_with_shifts(quiver_file, tmp_path, capsys):
    rep = {"dim": [0, 0], "matrices": [[], []]}
    path = tmp_path / "zero.json"
    path.write_text(json.dumps(rep), encoding="utf-8")
    rc, out, _err = run_cli(
        capsys, ["--quiver", quiver_file, "cc-map", "--rep", str(path),
                 "--shifts", "1,0"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["results"]["poly"]["terms"] == [{"exp": [1, 0], "coef": 1}]
    assert doc["results"]["den"] == [-1, 0]


def test_canonical_decomposition_document(quiver_file, capsys):
    rc, out, _err = run_cli(
        capsys, ["--quiver", quiver_file, "canonical-decomp",
                 "--d", "3,1", "--method", "search"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["results"]["summands"] == [
        {"vector": [1, 0], "multiplicity": 1, "kind": "real_schur"},
        {"vector": [2, 1], "multiplicity": 1, "kind": "real_schur"}]
    assert doc["certificates"]["witnesses"]


def test_affine_generic_document(quiver_file, capsys):
    rc, out, _err = run_cli(
        capsys, ["--quiver", quiver_file, "affine-generic", "--d", "1,1"])
    assert rc == 0
    res = json.loads(out)["results"]
    assert res["vector"] == [1, 1]
    assert res["tag"] == "delta_layer"
    assert res["delta_power"] == 1


def test_base_change_document(capsys):
    rc, out, _err = run_cli(
        capsys, ["base-change", "--source", "G", "--target", "SZ",
                 "--size", "3"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["results"]["base_change"]["matrix"] == [
        [1, 0, 2], [0, 1, 0], [0, 0, 1]]
    assert doc["results"]["positivity"]["nonnegative"] is True


def test_family_window_document(capsys):
    rc, out, _err = run_cli(
        capsys, ["kronecker-bases", "--kind", "CZ", "--n-max", "2",
                 "--bound", "1,1"])
    assert rc == 0
    names = [e[0] for e in
             json.loads(out)["results"]["family"]["elements"]]
    assert "imag:2" in names
    assert len(names) == len(set(names))


def test_independence_document(capsys):
    rc, out, _err = run_cli(
        capsys, ["independence", "--kind", "G", "--n-max", "3",
                 "--bound", "2,2"])
    assert rc == 0
    rep = json.loads(out)["results"]["independence"]
    assert rep["independent"] is True and rep["rank"] == rep["elements"]
