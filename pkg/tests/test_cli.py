import json

import pytest

from nilcoh.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_kostant_example(capsys):
    data = run_json(capsys, "kostant", "--type", "A2", "--p", "5",
                    "--J", "", "--lambda", "0,0")
    assert data["dims"] == [1, 2, 2, 1]
    assert data["config"]["type"] == "A2"
    degrees = [e["degree"] for e in data["entries"]]
    assert sorted(degrees) == [0, 1, 1, 2, 2, 3]


def test_verify_sum_dot_b2(capsys):
    data = run_json(capsys, "verify", "sum-dot", "--type", "B2", "--p", "5")
    assert data["violations"]
    witnesses = [tuple(map(tuple, v["witnesses"])) for v in data["violations"]]
    assert ((2, 1), (2, 1), (1, 2)) in witnesses


def test_ext_with_square_check(capsys):
    data = run_json(capsys, "ext", "--type", "B2", "--p", "5",
                    "--max-degree", "4", "--check-square")
    assert data["dims"] == [1, 2, 6, 10, 19]
    assert data["example_product"]["nonzero"] is True


def test_exit_code_2_on_gate_failure(capsys):
    code, out, err = run_cli(capsys, "ring-table", "--type", "A2", "--l", "9")
    assert code == 2
    assert "coprime" in err
    assert out == ""


def test_exit_code_2_on_bad_lambda(capsys):
    code, _, err = run_cli(capsys, "alcove", "--type", "A2", "--p", "5",
                           "--lambda", "1")
    assert code == 2
    assert "fundamental coordinates" in err


def test_exit_code_2_on_missing_modulus(capsys):
    code, _, err = run_cli(capsys, "ext", "--type", "A2")
    assert code == 2


def test_rootsys_payload(capsys):
    data = run_json(capsys, "rootsys", "--type", "G2")
    assert data["coxeter_number"] == 6
    assert len(data["positive_roots"]) == 6


def test_weyl_payload(capsys):
    data = run_json(capsys, "weyl", "--type", "B2", "--J", "0")
    assert data["order"] == 8
    assert data["length_polynomial"] == [1, 2, 2, 2, 1]
    assert len(data["min_coset_reps"]) == 4


def test_linkage(capsys):
    data = run_json(capsys, "linkage", "--type", "B2", "--p", "5",
                    "--lambda", "0,1")
    assert data["linked"] is True and data["sigma"] == [0, 1]


def test_oracle_and_character_agree(capsys):
    oracle = run_json(capsys, "oracle-koszul", "--type", "A2", "--p", "5")
    kostant = run_json(capsys, "kostant", "--type", "A2", "--p", "5",
                       "--lambda", "0,0")
    assert oracle["dims"] == kostant["dims"]


def test_character_frobenius(capsys):
    data = run_json(capsys, "character", "--type", "B2", "--p", "5",
                    "--lambda", "0,0")
    assert data["dims"] == [1, 2, 6, 10, 19]


def test_quantum_subcommand(capsys):
    data = run_json(capsys, "quantum", "--type", "A2", "--l", "5")
    assert data["defining_relations"] and data["confluent"]
    assert data["square_free_basis_count"] == 8


def test_ring_table_csv_and_tex(capsys):
    code, out, _ = run_cli(capsys, "ring-table", "--type", "A2", "--p", "7",
                           "--format", "csv")
    assert code == 0
    lines = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert lines[0].split(",")[:3] == ["w", "w_prime", "result"]
    assert len(lines) == 1 + 36
    code, out, _ = run_cli(capsys, "ring-table", "--type", "A2", "--p", "7",
                           "--format", "tex")
    assert code == 0 and out.splitlines()[0].endswith(r"\\")


def test_json_round_trip_determinism(capsys):
    a = run_json(capsys, "verify", "sum-dot", "--type", "A2", "--p", "5")
    b = run_json(capsys, "verify", "sum-dot", "--type", "A2", "--p", "5")
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_verify_suite(capsys):
    data = run_json(capsys, "verify", "suite", "--type", "A2", "--p", "5")
    assert data["pass"] is True
