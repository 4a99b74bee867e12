from __future__ import annotations

import json

import pytest

from focklab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_wt_examples(capsys):
    code, out = run(capsys, "--e", "2", "--s", "0", "wt", "[[ ]]")
    assert code == 0 and json.loads(out) == {"lambda": [1, 0], "delta": 0}
    code, out = run(capsys, "--e", "2", "--s", "0", "wt", "[[1]]")
    assert code == 0 and json.loads(out) == {"lambda": [-1, 2], "delta": -1}
    code, out = run(capsys, "--e", "2", "--s", "0,1", "wt", "[[1],[1]]")
    assert code == 0 and json.loads(out) == {"lambda": [1, 1], "delta": -1}


def test_wt_parse_error(capsys):
    code = main(["--e", "2", "--s", "0", "wt", "[[1,2]]"])
    captured = capsys.readouterr()
    assert code == 2 and "error" in captured.err


def test_flags_after_subcommand(capsys):
    code, out = run(capsys, "wt", "--e", "2", "--s", "0,1", "[[1],[1]]")
    assert code == 0 and json.loads(out) == {"lambda": [1, 1], "delta": -1}


def test_apply_examples(capsys):
    code, out = run(capsys, "--e", "2", "--s", "0", "apply", "f", "0", "[[]]")
    assert code == 0 and json.loads(out) == [{"coeff": "1", "mp": [[1]]}]

    vector = json.dumps(
        [{"coeff": "1", "mp": [[2]]}, {"coeff": "1", "mp": [[1, 1]]}]
    )
    code, out = run(capsys, "--e", "2", "--s", "0", "apply", "e", "1", vector)
    assert code == 0 and json.loads(out) == [{"coeff": "2", "mp": [[1]]}]

    code, out = run(capsys, "--e", "2", "--s", "0", "apply", "e", "0", "[[]]")
    assert code == 0 and json.loads(out) == []


def test_apply_bad_residue(capsys):
    code = main(["--e", "2", "--s", "0", "apply", "e", "5", "[[]]"])
    assert code == 2


def test_crystal_graph_sizes(capsys):
    code, out = run(capsys, "--e", "2", "--s", "0", "--max-rank", "0",
                    "crystal-graph")
    doc = json.loads(out)
    assert code == 0 and len(doc["nodes"]) == 1 and not doc["edges"]

    code, out = run(capsys, "--e", "2", "--s", "0", "--max-rank", "2",
                    "crystal-graph")
    doc = json.loads(out)
    assert len(doc["nodes"]) == 4 and len(doc["edges"]) == 2


def test_crystal_graph_dot(capsys):
    code, out = run(capsys, "--e", "2", "--s", "0", "--max-rank", "1",
                    "--format", "dot", "crystal-graph")
    assert code == 0 and out.startswith("digraph crystal {")


def test_invalid_order_is_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["--order", "sideways", "crystal-graph"])
    assert err.value.code == 2


def test_graph_resource_bound(capsys):
    code = main(["--e", "2", "--s", "0,1,2", "--max-rank", "40",
                 "crystal-graph"])
    captured = capsys.readouterr()
    assert code == 2 and "resource bound" in captured.err


def test_blocks_examples(capsys):
    code, out = run(capsys, "--e", "2", "--s", "0", "blocks", "2")
    doc = json.loads(out)
    assert code == 0 and len(doc["blocks"]) == 1
    assert doc["blocks"][0]["multipartitions"] == [[[1, 1]], [[2]]]

    code, out = run(capsys, "--e", "2", "--s", "0", "blocks", "3")
    assert len(json.loads(out)["blocks"]) == 2

    code, out = run(capsys, "--e", "2", "--s", "0", "blocks", "0")
    assert len(json.loads(out)["blocks"]) == 1


def test_verify_fock(capsys):
    code, out = run(capsys, "verify", "fock", "--e", "2", "--s", "0",
                    "--max-rank", "4")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert all(doc["status"] == "pass" for doc in lines)
    assert {doc["axiom"] for doc in lines} >= {"fock.pieri", "fock.serre"}


def test_verify_hecke(capsys):
    code, out = run(capsys, "verify", "hecke", "--e", "2", "--s", "0,1",
                    "--n", "2")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    by_axiom = {doc["axiom"]: doc for doc in lines}
    assert by_axiom["hecke.relations"]["status"] == "pass"
    assert by_axiom["hecke.block_weights"]["status"] == "pass"


def test_verify_perfect_is_informational(capsys):
    # findings on the iff bullet and strict residual must not fail the run
    code, out = run(capsys, "verify", "perfect", "--e", "2", "--s", "0",
                    "--max-rank", "3")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    by_axiom = {doc["axiom"]: doc for doc in lines}
    assert by_axiom["perfect.support_iff"]["status"] == "fail"
    assert by_axiom["perfect.support_iff"]["witnesses"]
    assert by_axiom["perfect.residual_strict"]["status"] == "fail"
    assert by_axiom["perfect.mutual_inverse"]["status"] == "pass"


def test_verify_all_exit_zero(capsys):
    code, out = run(capsys, "verify", "all", "--e", "2", "--s", "0",
                    "--max-rank", "3", "--n", "2")
    assert code == 0
    for line in out.splitlines():
        doc = json.loads(line)
        assert set(doc) == {"axiom", "status", "witnesses"}


def test_verify_determinism(capsys):
    _, first = run(capsys, "verify", "all", "--e", "2", "--s", "0",
                   "--max-rank", "3", "--n", "2")
    _, second = run(capsys, "verify", "all", "--e", "2", "--s", "0",
                    "--max-rank", "3", "--n", "2")
    assert first == second


def test_unknown_suite_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["verify", "bogus"])
    assert err.value.code == 2


def test_hecke_build_output(capsys):
    code, out = run(capsys, "--e", "2", "--s", "0,1", "--n", "2", "hecke-build")
    doc = json.loads(out)
    assert code == 0 and doc["dimension"] == 8
    assert len(doc["words"]) == 8 and doc["words"][0] == "Id"


def test_dim_bound_env(capsys, monkeypatch):
    monkeypatch.setenv("FOCK_MAX_DIM", "4")
    code = main(["--e", "2", "--s", "0,1", "--n", "2", "hecke-build"])
    assert code == 2
    monkeypatch.setenv("FOCK_MAX_DIM", "8")
    assert main(["--e", "2", "--s", "0,1", "--n", "2", "hecke-build"]) == 0
    capsys.readouterr()
