"""CLI behavior: commands, report formats, determinism, exit codes."""

import json
import math

import numpy as np

from spinorlab.cli import (
    EXIT_BAD_INPUT,
    EXIT_BAD_KINEMATICS,
    EXIT_BAD_OPERATOR,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    main,
)
from spinorlab.duals import KinematicPoint, xi
from spinorlab.serialize import dump_json, matrix_to_obj, spinor_to_obj
from spinorlab.weyl import GAMMA0

KFLAGS = ["--mass", "1", "--momentum", "1", "--theta", "0.7", "--phi", "0.3"]


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_verify_theorems_passes(capsys):
    code, out = run(capsys, ["verify-theorems", "--seed", "42", "--trials", "40"])
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["status"] == "pass"
    assert {c["name"] for c in report["checks"]} >= {
        "block-structure-validation",
        "adjoint-fixed-points",
        "closure-commuting-products",
        "inverse-closure-lemma",
    }
    assert all(c["status"] == "pass" for c in report["checks"])


def test_reports_are_deterministic(capsys):
    _, out1 = run(capsys, ["verify-theorems", "--seed", "7", "--trials", "15"])
    _, out2 = run(capsys, ["verify-theorems", "--seed", "7", "--trials", "15"])
    assert out1 == out2


def test_table1_suite(capsys):
    code, out = run(capsys, ["table1", "--trials", "25", *KFLAGS])
    assert code == EXIT_OK
    report = json.loads(out)
    assert len(report["checks"]) == 7
    assert all(c["residual"] <= 1e-9 for c in report["checks"])


def test_cayley_csv_reproduces_the_reference_table(capsys):
    code, out = run(capsys, ["cayley", "--group", "GF", "--format", "csv", *KFLAGS])
    assert code == EXIT_OK
    assert out.splitlines() == [
        ",I,G,F,FG",
        "I,I,G,F,FG",
        "G,G,I,FG,F",
        "F,F,FG,I,G",
        "FG,FG,F,G,I",
    ]


def test_cayley_json_identifies_k4(capsys):
    code, out = run(capsys, ["cayley", "--group", "GXiDagger", *KFLAGS])
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["payload"]["name"] == "K4"
    assert report["payload"]["labels"] == ["I", "G", "XiDagger", "GXiDagger"]
    assert report["payload"]["table"] == [
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ]


def test_csv_format_only_for_cayley(capsys):
    code = main(["embed", "--format", "csv", "--trials", "5"])
    assert code == 2


def test_embed_and_spinor_spaces(capsys):
    code, out = run(capsys, ["embed", "--trials", "30", "--format", "text"])
    assert code == EXIT_OK
    assert "FAIL" not in out
    code, out = run(capsys, ["spinor-spaces", "--trials", "20", "--format", "text"])
    assert code == EXIT_OK
    assert "FAIL" not in out


def test_dual_command_identity_omega(tmp_path, capsys):
    psi_file = tmp_path / "psi.json"
    psi_file.write_text(dump_json(spinor_to_obj(np.array([1.0, 0, 0, 0]))))
    code, out = run(
        capsys,
        ["dual", "--psi", str(psi_file), "--omega", "identity",
         "--mass", "1", "--momentum", "1",
         "--theta", str(math.pi / 2), "--phi", "0"],
    )
    assert code == EXIT_OK
    report = json.loads(out)
    got = np.array([complex(re, im) for re, im in report["payload"]["dual"]])
    k = KinematicPoint(1.0, 1.0, math.pi / 2, 0.0)
    expected = np.array([1.0, 0, 0, 0]).conj() @ GAMMA0 @ xi(k)
    assert abs(got - expected).max() < 1e-12


def test_dual_command_with_omega_file(tmp_path, capsys):
    k = KinematicPoint(1.0, 1.0, 0.7, 0.3)
    psi_file = tmp_path / "psi.json"
    psi_file.write_text(dump_json(spinor_to_obj(np.array([0, 1j, 0, 0.5]))))
    omega_file = tmp_path / "omega.json"
    omega_file.write_text(dump_json(matrix_to_obj(np.eye(4))))
    code, out = run(
        capsys, ["dual", "--psi", str(psi_file), "--omega", str(omega_file), *KFLAGS]
    )
    assert code == EXIT_OK
    report = json.loads(out)
    got = np.array([complex(re, im) for re, im in report["payload"]["dual"]])
    expected = np.array([0, 1j, 0, 0.5]).conj() @ GAMMA0 @ xi(k)
    assert abs(got - expected).max() < 1e-12


def test_dual_rejects_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"not": "a spinor"}')
    assert main(["dual", "--psi", str(bad)]) == EXIT_BAD_INPUT
    missing = tmp_path / "missing.json"
    assert main(["dual", "--psi", str(missing)]) == EXIT_BAD_INPUT


def test_dual_rejects_invalid_omega(tmp_path, capsys):
    psi_file = tmp_path / "psi.json"
    psi_file.write_text(dump_json(spinor_to_obj(np.ones(4))))
    omega_file = tmp_path / "omega.json"
    omega_file.write_text(dump_json(matrix_to_obj(1j * np.eye(4))))
    code = main(["dual", "--psi", str(psi_file), "--omega", str(omega_file)])
    assert code == EXIT_BAD_OPERATOR


def test_offshell_energy_rejected(tmp_path, capsys):
    psi_file = tmp_path / "psi.json"
    psi_file.write_text(dump_json(spinor_to_obj(np.ones(4))))
    code = main(["dual", "--psi", str(psi_file), "--energy", "9.0"])
    assert code == EXIT_BAD_KINEMATICS
    assert main(["table1", "--mass", "-2"]) == EXIT_BAD_KINEMATICS


def test_classify_command(tmp_path, capsys):
    from spinorlab.duals import named_operator

    k = KinematicPoint(1.0, 1.0, 0.7, 0.3)
    rng = np.random.default_rng(0)
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    partner = psi @ named_operator("F", k)
    loner = rng.normal(size=4) + 1j * rng.normal(size=4)
    duals_file = tmp_path / "duals.json"
    duals_file.write_text(
        dump_json([spinor_to_obj(v) for v in (psi, partner, loner)])
    )
    code, out = run(
        capsys, ["classify", "--duals", str(duals_file), "--group", "GF", *KFLAGS]
    )
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["payload"]["classes"] == {"0": [0, 1], "1": [2]}


def test_output_file_written(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["embed", "--trials", "10", "--output", str(target)])
    assert code == EXIT_OK
    report = json.loads(target.read_text())
    assert report["suite"] == "embed"


def test_failing_check_gives_exit_one(tmp_path, capsys):
    # An absurdly tight tolerance forces table1 residuals to fail.
    code = main(["table1", "--trials", "5", "--tolerance", "1e-30"])
    assert code == EXIT_CHECK_FAILED
