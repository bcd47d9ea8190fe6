import json

from srlab import cli
from srlab.claims import CLAIMS, ClaimRecord
from srlab.complexes import complex_from_json, cover_complex


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_build_family(capsys):
    code, out = run(capsys, "build", "--family", "C", "--n", "4", "--k", "2")
    assert code == 0
    obj = json.loads(out)
    assert obj["facets"] == [[1, 3], [2, 4]] and not obj["void"]


def test_build_void_exit_code(capsys):
    code, out = run(capsys, "build", "--family", "C", "--n", "4", "--k", "3")
    assert code == 3
    assert json.loads(out)["void"]


def test_build_dual_and_clique(capsys):
    code, out = run(capsys, "build", "--family", "K2xKn", "--n", "2", "--k", "2", "--dual")
    assert code == 0
    assert len(json.loads(out)["facets"]) == 4
    code, out = run(capsys, "build", "--family", "C2", "--n", "6", "--clique")
    assert code == 0
    assert len(json.loads(out)["facets"]) == 8


def test_usage_errors_exit_1(capsys):
    assert cli.main(["build", "--family", "C", "--n", "4"]) == 1  # missing --k
    assert cli.main(["build"]) == 1
    assert cli.main(["verify"]) == 1
    assert cli.main(["nonsense"]) == 1
    assert cli.main(["scan", "--conjecture", "Qn"]) == 1


def test_guard_exit_2(capsys):
    assert cli.main(["invariants", "--family", "P", "--n", "23", "--k", "2"]) == 2


def test_invariants_void_exit_3(capsys):
    code, out = run(capsys, "invariants", "--family", "C", "--n", "4", "--k", "3")
    assert code == 3
    assert json.loads(out)["note"] == "void complex"


def test_invariants_report(capsys, tmp_path):
    code, out = run(capsys, "invariants", "--family", "C2", "--n", "6", "--k", "2")
    assert code == 0
    rep = json.loads(out)
    assert rep["fVector"] == [1, 6, 15, 12, 3]
    assert rep["linearDegree"] == 3
    assert rep["cmReisner"] is False and rep["cmAuslanderBuchsbaum"] is False
    assert rep["betti"]["entries"] == [[0, 0, 1], [1, 3, 8], [2, 4, 12], [3, 5, 6], [4, 6, 1]]
    assert rep["eagonReiner"]["consistent"] is True
    assert rep["hilbert"]["denomPower"] == 6


def test_invariants_cache_bytes_identical(capsys, tmp_path):
    cachedir = str(tmp_path / "cache")
    args = ["invariants", "--family", "C", "--n", "6", "--k", "2", "--cache-dir", cachedir]
    code1 = cli.main(args)
    out1 = capsys.readouterr().out
    assert code1 == 0
    assert list((tmp_path / "cache").iterdir())  # cache populated
    code2 = cli.main(args)
    out2 = capsys.readouterr().out
    assert code2 == 0 and out1 == out2
    # and identical to the uncached run
    code3 = cli.main(["invariants", "--family", "C", "--n", "6", "--k", "2", "--no-cache"])
    out3 = capsys.readouterr().out
    assert code3 == 0 and out3 == out1


def test_cache_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SRLAB_CACHE_DIR", str(tmp_path / "envcache"))
    assert cli.main(["invariants", "--family", "C", "--n", "5", "--k", "2"]) == 0
    capsys.readouterr()
    assert list((tmp_path / "envcache").iterdir())


def test_roundtrip_build_then_invariants(capsys, tmp_path):
    code, out = run(capsys, "build", "--family", "L2", "--n", "6", "--k", "2")
    assert code == 0
    f = tmp_path / "complex.json"
    f.write_text(out)
    code, via_file = run(capsys, "invariants", "--input", str(f))
    assert code == 0
    code, direct = run(capsys, "invariants", "--family", "L2", "--n", "6", "--k", "2")
    assert code == 0
    assert via_file == direct
    assert complex_from_json(json.loads(out)) == cover_complex(__import__("srlab.graphs", fromlist=["path_square"]).path_square(6), 2)


def test_graph_file_input(capsys, tmp_path):
    f = tmp_path / "graph.json"
    f.write_text(json.dumps({"n": 4, "edges": [[1, 2], [2, 3], [3, 4], [4, 1]]}))
    code, out = run(capsys, "build", "--input", str(f), "--k", "2")
    assert code == 0
    assert json.loads(out)["facets"] == [[1, 3], [2, 4]]
    f2 = tmp_path / "fam.json"
    f2.write_text(json.dumps({"family": "C2", "n": 9}))
    code, out = run(capsys, "build", "--input", str(f2), "--k", "3")
    assert code == 0
    assert len(json.loads(out)["facets"]) == 3


def test_verify_claim_and_formats(capsys):
    code, out = run(capsys, "verify", "--claim", "k44.example", "--format", "pretty")
    assert code == 0 and "CONFIRMED" in out
    code, out = run(capsys, "verify", "--claim", "grid.as-stated", "--format", "json")
    assert code == 0  # expected refutation does not fail the run
    payload = json.loads(out)
    assert payload["results"][0]["status"] == "REFUTED"
    code, out = run(capsys, "verify", "--claim", "cycle.betti.adjudicated", "--format", "tsv", "--field", "both")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("claim\t") and len(lines) == 3


def test_verify_exit_4_on_unexpected_refutation(capsys, monkeypatch):
    def bad_runner(params, field):
        return False, "expected", "got", [], None

    monkeypatch.setitem(CLAIMS, "always.fails", ClaimRecord("always.fails", "any", "test", True, bad_runner))
    assert cli.main(["verify", "--claim", "always.fails"]) == 4


def test_scan_formats_and_exit(capsys):
    code, out = run(capsys, "scan", "--conjecture", "Ln", "--kmax", "2", "--nmax", "7", "--format", "tsv")
    assert code == 0
    assert out.startswith("k\tn\tfield")
    code, out = run(capsys, "scan", "--conjecture", "L2n", "--kmax", "2", "--nmax", "7", "--format", "json", "--field", "Q")
    assert code == 0
    rep = json.loads(out)
    assert rep["conjecture"] == "L2n" and rep["counterexamples"] == []


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    assert cli.main(["build", "--family", "C", "--n", "5", "--k", "2", "-o", str(target)]) == 0
    assert json.loads(target.read_text())["n"] == 5
