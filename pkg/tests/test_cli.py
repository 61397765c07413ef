import json

from djturan import EdgeSubgraph, build_graph, from_edge_list
from djturan.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_cycles_count(capsys):
    code, data = run_json(capsys, "cycles", "--n", "5", "--k", "2", "--length", "6", "--count")
    assert code == 0
    assert data["result"] == {"length": 6, "count": 20, "truncated": False}
    assert data["version"]
    assert data["config"]["n"] == 5


def test_cycles_enumerate_and_girth(capsys):
    code, data = run_json(capsys, "cycles", "--n", "3", "--k", "1", "--length", "6", "--enumerate")
    assert code == 0
    assert data["result"]["count"] == 1
    assert len(data["result"]["cycles"][0]) == 6
    code, data = run_json(capsys, "cycles", "--n", "5", "--k", "2", "--girth")
    assert data["result"]["girth"] == 6


def test_extremal_witness_importable(capsys):
    code, data = run_json(capsys, "extremal", "--n", "5", "--k", "2", "--cycle", "6")
    assert code == 0
    res = data["result"]
    assert res["exact"] and res["value"] == 25
    g = build_graph(5, 2)
    witness = EdgeSubgraph.from_hex(g, res["witness_edge_mask_hex"])
    assert witness.edge_count() == res["value"]


def test_generate_roundtrip(capsys):
    code, out = run(capsys, "generate", "--n", "5", "--k", "2")
    assert code == 0
    g = from_edge_list(out)
    assert g.num_edges == 30


def test_chi_ok(capsys):
    code, data = run_json(capsys, "chi", "--n", "5", "--k", "2", "--drop-edge", "0")
    assert code == 0
    assert data["result"]["n_c6"] == 20
    assert all(rec["ok"] for rec in data["result"]["identities"])


def test_aux_identities_and_lemmas(capsys):
    code, data = run_json(
        capsys, "aux", "--n", "5", "--k", "2", "--random-index", "3", "--seed", "9"
    )
    assert code == 0
    assert all(rec["ok"] for rec in data["result"]["identities"])
    code, data = run_json(capsys, "aux", "--n", "5", "--k", "2", "--gamma", "1")
    assert code == 0
    assert len(data["result"]["hgamma"]["vertices"]) == 4


def test_bounds_text_and_csv(capsys):
    code, out = run(capsys, "bounds", "--k", "2", "--cycle", "6", "--format", "text")
    assert code == 0 and "hexagon-free-hard" in out
    code, out = run(capsys, "bounds", "--k", "2", "--cycle", "6", "--series",
                    "--k-max", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "k,bound,search_value"


def test_ramsey(capsys):
    code, data = run_json(
        capsys, "ramsey", "--n", "3", "--k", "1", "--colors", "2", "--cycle", "6",
        "--rounds", "2", "--seed", "4"
    )
    assert code == 0
    assert len(data["result"]["rounds"]) == 2


def test_verify_small_grid_deterministic(capsys):
    code1, out1 = run(capsys, "verify", "--max-n", "5", "--seed", "3")
    code2, out2 = run(capsys, "verify", "--max-n", "5", "--seed", "3")
    assert code1 == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data["result"]["ok"]
    assert all(c["ok"] for c in data["result"]["checks"])


def test_parameter_error_exit_code(capsys):
    code = main(["cycles", "--n", "4", "--k", "2", "--length", "6"])
    err = capsys.readouterr().err
    assert code == 2
    assert "n >= 2k+1" in err


def test_output_dir_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("DJTURAN_OUTPUT_DIR", str(tmp_path))
    code, out = run(
        capsys, "cycles", "--n", "5", "--k", "2", "--length", "6", "--output", "c.json"
    )
    assert code == 0
    assert (tmp_path / "c.json").read_text() == out
