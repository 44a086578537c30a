import json

import numpy as np
import pytest

from phasepoint.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decompose_ht(capsys):
    code, out, _ = run(capsys, "decompose", "--modulus", "5", "--matrix", "0,1,4,0")
    assert code == 0
    payload = json.loads(out)
    assert payload["modulus"] == 5
    assert payload["matrix"] == [0, 1, 4, 0]
    assert payload["word"] == [
        {"gen": "+", "exp": 1},
        {"gen": "-", "exp": 4},
        {"gen": "+", "exp": 1},
    ]
    assert payload["verified"] is True


def test_decompose_identity_empty_word(capsys):
    code, out, _ = run(capsys, "decompose", "--modulus", "7", "--matrix", "1,0,0,1")
    assert code == 0
    assert json.loads(out)["word"] == []


def test_decompose_rejects_non_symplectic(capsys):
    code, _, err = run(capsys, "decompose", "--modulus", "7", "--matrix", "1,1,1,1")
    assert code == 2
    assert "det" in err


def test_decompose_bfs_method(capsys):
    code, out, _ = run(
        capsys, "decompose", "--modulus", "5", "--matrix", "2,1,1,1", "--method", "bfs"
    )
    assert code == 0
    assert json.loads(out)["verified"] is True


def test_decompose_bad_matrix_string(capsys):
    code, _, err = run(capsys, "decompose", "--modulus", "5", "--matrix", "1,2,3")
    assert code == 2


def test_rep_odd_seven(capsys):
    code, out, _ = run(
        capsys, "rep", "--dim", "7", "--parity", "odd", "--matrix", "1,1,0,1"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 7
    assert payload["covariance_residual"] < 1e-10
    matrix = np.array([[complex(re, im) for re, im in row] for row in payload["unitary"]])
    assert np.abs(matrix.conj().T @ matrix - np.eye(7)).max() < 1e-12
    assert matrix[0, 0] == pytest.approx(1 / np.sqrt(7))


def test_rep_even_diagonal_generator(capsys):
    code, out, _ = run(
        capsys, "rep", "--dim", "2", "--parity", "even", "--matrix", "1,0,1,1"
    )
    assert code == 0
    payload = json.loads(out)
    matrix = np.array([[complex(re, im) for re, im in row] for row in payload["unitary"]])
    assert np.abs(matrix - np.diag([1.0, 1j])).max() < 1e-12


def test_rep_identity_up_to_phase(capsys):
    code, out, _ = run(
        capsys, "rep", "--dim", "3", "--parity", "odd", "--matrix", "1,0,0,1"
    )
    assert code == 0
    payload = json.loads(out)
    matrix = np.array([[complex(re, im) for re, im in row] for row in payload["unitary"]])
    off = matrix - np.diag(np.diag(matrix))
    assert np.abs(off).max() < 1e-12
    diag = np.diag(matrix)
    assert np.abs(diag - diag[0]).max() < 1e-12


def test_rep_parity_mismatch(capsys):
    code, _, err = run(
        capsys, "rep", "--dim", "4", "--parity", "odd", "--matrix", "1,0,0,1"
    )
    assert code == 2


def test_rep_symmetric_index_style(capsys):
    code, out, _ = run(
        capsys,
        "rep", "--dim", "3", "--parity", "odd", "--matrix", "1,0,1,1",
        "--index-style", "symmetric",
    )
    assert code == 0
    payload = json.loads(out)
    matrix = np.array([[complex(re, im) for re, im in row] for row in payload["unitary"]])
    w = np.exp(2j * np.pi / 3)
    assert np.abs(matrix - np.diag([w**2, 1, w**2])).max() < 1e-12


def write_state(path, amplitudes):
    data = {
        "dim": len(amplitudes),
        "amplitudes": [[z.real, z.imag] for z in np.asarray(amplitudes, dtype=complex)],
    }
    path.write_text(json.dumps(data))


def test_wigner_basis_state(capsys, tmp_path):
    state_file = tmp_path / "state.json"
    write_state(state_file, [1.0, 0.0, 0.0])
    code, out, _ = run(capsys, "wigner", "--state", str(state_file), "--parity", "odd")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "# parity=odd, modulus=3"
    rows = [list(map(float, line.split(","))) for line in lines[1:4]]
    assert rows[0] == pytest.approx([1 / 3, 1 / 3, 1 / 3])
    assert rows[1] == pytest.approx([0.0, 0.0, 0.0])
    assert lines[4].startswith("# sum=")
    assert float(lines[4].split("=")[1]) == pytest.approx(1.0)


def test_wigner_even_doubled_grid(capsys, tmp_path):
    state_file = tmp_path / "state.json"
    write_state(state_file, [0.0, 1.0])
    code, out, _ = run(capsys, "wigner", "--state", str(state_file), "--parity", "even")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "# parity=even, modulus=4"
    rows = np.array([list(map(float, line.split(","))) for line in lines[1:5]])
    assert rows.shape == (4, 4)
    marginal = rows.sum(axis=1)
    assert marginal == pytest.approx([0.0, 0.0, 1.0, 0.0])


def test_wigner_symmetric_index_style(capsys, tmp_path):
    state_file = tmp_path / "state.json"
    write_state(state_file, [1.0, 0.0, 0.0])
    code, out, _ = run(
        capsys,
        "wigner", "--state", str(state_file), "--parity", "odd",
        "--index-style", "symmetric",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "# parity=odd, modulus=3, index-style=symmetric"
    rows = [list(map(float, line.split(","))) for line in lines[1:4]]
    # symmetric row order is (-1, 0, 1), so the m=0 row sits in the middle
    assert rows[1] == pytest.approx([1 / 3, 1 / 3, 1 / 3])
    assert rows[0] == pytest.approx([0.0, 0.0, 0.0])


def test_wigner_rejects_unnormalized(capsys, tmp_path):
    state_file = tmp_path / "state.json"
    write_state(state_file, [1.0, 1.0])
    code, _, err = run(capsys, "wigner", "--state", str(state_file), "--parity", "even")
    assert code == 2
    assert "norm" in err


def test_wigner_parity_mismatch(capsys, tmp_path):
    state_file = tmp_path / "state.json"
    write_state(state_file, [1.0, 0.0, 0.0])
    code, _, _ = run(capsys, "wigner", "--state", str(state_file), "--parity", "even")
    assert code == 2


def test_verify_odd_all_passes(capsys):
    code, out, _ = run(capsys, "verify", "--dim", "5", "--parity", "odd", "--suite", "all")
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    names = [c["name"] for c in payload["checks"]]
    assert names == sorted(names)
    assert all(c["pass"] for c in payload["checks"])


def test_verify_even_covariance_passes(capsys):
    code, out, _ = run(
        capsys, "verify", "--dim", "2", "--parity", "even", "--suite", "covariance"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    assert any(c["name"] == "covariance_group" for c in payload["checks"])


def test_verify_even_sw_reports_trace_failure(capsys):
    # The even-lattice kernel is traceless at ghost points, so the strict
    # unit-trace check cannot pass; the suite reports it honestly.
    code, out, _ = run(capsys, "verify", "--dim", "2", "--parity", "even", "--suite", "sw")
    assert code == 1
    payload = json.loads(out)
    by_name = {c["name"]: c for c in payload["checks"]}
    assert by_name["sw_hermiticity"]["pass"] is True
    assert by_name["sw_unit_trace"]["pass"] is False
    assert by_name["sw_unit_trace"]["max_residual"] == pytest.approx(1.0)


def test_verify_parity_mismatch_exits_two(capsys):
    code, _, _ = run(capsys, "verify", "--dim", "4", "--parity", "odd")
    assert code == 2


def test_verify_translation_even_rejected(capsys):
    code, _, _ = run(
        capsys, "verify", "--dim", "2", "--parity", "even", "--suite", "translation"
    )
    assert code == 2


def test_verify_tol_override(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--dim", "3", "--parity", "odd", "--suite", "covariance",
        "--tol", "1e-30",
    )
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_bad_flags_exit_two(capsys):
    assert run(capsys, "verify", "--dim", "3", "--parity", "odd", "--suite", "bogus")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_outputs_are_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "--dim", "3", "--parity", "odd", "--suite", "projectivity")
    _, second, _ = run(capsys, "verify", "--dim", "3", "--parity", "odd", "--suite", "projectivity")
    assert first == second
    _, r1, _ = run(capsys, "rep", "--dim", "5", "--parity", "odd", "--matrix", "2,1,1,1")
    _, r2, _ = run(capsys, "rep", "--dim", "5", "--parity", "odd", "--matrix", "2,1,1,1")
    assert r1 == r2
