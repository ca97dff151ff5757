import json

import pytest

from oddramsey.cli import STATUS_CODES, USAGE_EXIT, main
from oddramsey.colored_graph import instance_from_json, instance_to_json
from oddramsey.constructions import random_coloring


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_emits_instance(capsys):
    code, out, _ = run_cli(capsys, "construct", "unique-upper", "--n", "6")
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 6 and obj["r"] == 4 and len(obj["edges"]) == 15
    # the bare document round-trips through the instance parser
    instance_from_json(out)


def test_gen_verify_round_trip(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "gen", "random", "--n", "6", "--r", "2",
                           "--seed", "3")
    assert code == 0
    instance = tmp_path / "inst.json"
    instance.write_text(out)
    code, out2, _ = run_cli(
        capsys, "verify", "cycles", "--input", str(instance),
        "--predicate", "even-chromatic",
    )
    assert code == 0
    payload = json.loads(out2)
    assert payload["status"] == "ok"
    assert isinstance(payload["holds"], bool)
    if not payload["holds"]:
        assert "counterexample" in payload


def test_find_unique_free_with_trace(tmp_path, capsys):
    inst = tmp_path / "mono8.json"
    inst.write_text(instance_to_json(random_coloring(8, 2, 0)))
    trace = tmp_path / "trace.json"
    code, out, _ = run_cli(
        capsys, "find", "unique-free", "--input", str(inst),
        "--trace", str(trace),
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "ok"
    assert len(payload["cycle"]) == 8
    assert all(count != 1 for count in payload["census"].values())
    logged = json.loads(trace.read_text())
    assert logged["palette"] == 2
    assert any(ev["event"] == "free-color" for ev in logged["events"])
    assert payload["trace_summary"]["events"] == len(logged["events"])


def test_find_even_hamilton(tmp_path, capsys):
    inst = tmp_path / "i.json"
    inst.write_text(instance_to_json(random_coloring(8, 2, 11)))
    code, out, _ = run_cli(
        capsys, "find", "even-hamilton", "--input", str(inst)
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["cycle"]) == 8
    assert all(v % 2 == 0 for v in payload["census"].values())
    assert "provenance" in payload


def test_find_even_kst_statuses(tmp_path, capsys):
    inst = tmp_path / "i.json"
    inst.write_text(instance_to_json(random_coloring(12, 2, 2)))
    code, out, _ = run_cli(
        capsys, "find", "even-kst", "--input", str(inst),
        "--s", "3", "--t", "4",
    )
    payload = json.loads(out)
    if code == 0:
        assert len(payload["A"]) == 3 and len(payload["B"]) == 4
    else:
        assert code in (STATUS_CODES["not_found"], STATUS_CODES["unknown"])
        assert "stage" in payload


def test_oracle_exact(capsys):
    code, out, _ = run_cli(
        capsys, "oracle", "exact", "--n", "4", "--mode", "unique", "--r", "1"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["exists"] is False
    code, out, _ = run_cli(
        capsys, "oracle", "exact", "--n", "4", "--mode", "unique", "--r", "3"
    )
    payload = json.loads(out)
    if payload["exists"]:
        assert "witness" in payload


def test_export_dot(tmp_path, capsys):
    inst = tmp_path / "i.json"
    chi = random_coloring(5, 2, 9)
    inst.write_text(instance_to_json(chi))
    code, out, _ = run_cli(capsys, "export", "dot", "--input", str(inst))
    assert code == 0
    dot = json.loads(out)["dot"]
    assert dot.startswith("graph ") and dot.rstrip().endswith("}")
    assert dot.count("--") == 10  # one line per edge
    assert dot.count("{") == dot.count("}")


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _, err = run_cli(
        capsys, "verify", "cycles", "--input", str(bad),
        "--predicate", "even-chromatic",
    )
    assert code == USAGE_EXIT and "usage error" in err
    code, _, _ = run_cli(capsys, "construct", "unique-upper", "--n", "5")
    assert code == STATUS_CODES["precondition_failed"]
    big = tmp_path / "big.json"
    big.write_text(instance_to_json(random_coloring(13, 2, 0)))
    code, out, _ = run_cli(
        capsys, "verify", "cycles", "--input", str(big),
        "--predicate", "even-chromatic",
    )
    assert code == STATUS_CODES["cap_exceeded"]
    inst = tmp_path / "k8r3.json"
    inst.write_text(instance_to_json(random_coloring(8, 3, 0)))
    code, out, _ = run_cli(capsys, "find", "unique-free", "--input", str(inst))
    assert code == STATUS_CODES["precondition_failed"]


def test_max_n_env_override(tmp_path, capsys, monkeypatch):
    big = tmp_path / "big.json"
    big.write_text(instance_to_json(random_coloring(13, 2, 0)))
    monkeypatch.setenv("ODDRAMSEY_MAX_N", "13")
    code, out, _ = run_cli(
        capsys, "verify", "cycles", "--input", str(big),
        "--predicate", "even-chromatic",
    )
    assert code in (0,)  # cap lifted; the check itself runs
    json.loads(out)


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["nonsense"]) == USAGE_EXIT


def test_stdout_byte_identical(tmp_path, capsys):
    inst = tmp_path / "i.json"
    inst.write_text(instance_to_json(random_coloring(10, 2, 4)))
    commands = [
        ["gen", "random", "--n", "9", "--r", "3", "--seed", "17"],
        ["construct", "unique-upper", "--n", "8"],
        ["find", "unique-free", "--input", str(inst)],
        ["find", "even-hamilton", "--input", str(inst)],
        ["oracle", "exact", "--n", "4", "--mode", "odd", "--r", "2"],
        ["export", "dot", "--input", str(inst)],
    ]
    for argv in commands:
        _, out1, _ = run_cli(capsys, *argv)
        _, out2, _ = run_cli(capsys, *argv)
        assert out1 == out2, argv
