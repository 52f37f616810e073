import subprocess
import sys

import numpy as np
import pytest

from gtfkit import LyapunovInput, NonlocalProblem, best_constant, phi_r
from gtfkit import verify
from gtfkit.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["eval", "sin", "--p", "2", "--q", "2", "--x", "0.5235987755982988"], 0.5),
        (["eval", "pi", "--p", "2", "--q", "2"], np.pi),
        (["eval", "pi", "--p", "2", "--q", "4"], 2.622057554292),
        (["eval", "cos", "--p", "2", "--q", "2", "--x", "0"], 1.0),
        (["eval", "asin", "--p", "2", "--q", "2", "--x", "1"], np.pi / 2),
        (["eval", "beta", "--a", "0.5", "--b", "0.5"], np.pi),
        (["eval", "ibeta", "--a", "2", "--b", "3", "--x", "0.4"], 0.5248),
        (["eval", "2f1", "--a", "1", "--b", "1", "--c", "2", "--x", "0.5"], 2 * np.log(2)),
        (["eval", "phi", "--r", "1.5", "--x", "0"], 0.0),
        (["eval", "u", "--p", "3", "--q", "2", "--x", "1"], 0.0),
        (["eval", "weight", "--p", "2", "--q", "inf", "--x", "0.3"], np.pi**2),
    ],
)
def test_eval(argv, expected, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert float(out) == pytest.approx(expected, rel=1e-12, abs=1e-14)
    assert len(out.strip().replace("-", "").replace(".", "").split("e")[0]) <= 15


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "sin", "--p", "2", "--q", "2", "--x", "4"],
        ["eval", "sin", "--p", "0.5", "--q", "2", "--x", "0.1"],
        ["eval", "sin", "--p", "2"],
        ["eval", "phi", "--r", "2.5", "--x", "0.1"],
        ["eval", "2f1", "--a", "1", "--b", "1", "--c", "-1", "--x", "0.5"],
        ["profile", "nonlocal", "--r", "1.5", "--n", "1"],
        ["lyapunov", "--p", "2", "--q", "0.5"],
    ],
)
def test_domain_errors_exit_2(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) == 1


@pytest.mark.parametrize(
    "argv", [["eval", "tan"], ["verify", "bogus"], ["eval", "sin", "--x", "abc"], ["profile", "nonlocal", "--n", "x"]]
)
def test_bad_arguments_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_non_convergence_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("GTFKIT_MAX_ITER", "1")
    code, _, err = run(["eval", "2f1", "--a", "0.5", "--b", "0.5", "--c", "1.5", "--x", "0.5"], capsys)
    assert code == 3
    assert "converge" in err


def test_bad_environment_exit_2(capsys, monkeypatch):
    monkeypatch.setenv("GTFKIT_REL_TOL", "-1")
    code, _, _ = run(["eval", "pi", "--p", "2", "--q", "2"], capsys)
    assert code == 2


def test_profile_shape(capsys):
    code, out, _ = run(["profile", "nonlocal", "--r", "1.5", "--H", "1", "--n", "4"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x,phi"
    rows = [tuple(map(float, line.split(","))) for line in lines[1:]]
    assert len(rows) == 5
    assert rows[0][1] == 0.0 and rows[-1][1] == pytest.approx(0.0, abs=1e-15)


def test_profile_general_argmax(capsys):
    _, out, _ = run(["profile", "general", "--p", "3", "--q", "2", "--H", "1", "--n", "100"], capsys)
    values = np.loadtxt(out.splitlines()[1:], delimiter=",")[:, 1]
    assert np.argmax(values) < 50


def test_profile_is_deterministic_and_lossless(tmp_path, capsys):
    args = ["profile", "nonlocal", "--r", "1.9", "--n", "50"]
    _, first, _ = run(args, capsys)
    _, second, _ = run(args, capsys)
    assert first == second
    out = tmp_path / "phi.csv"
    main(args + ["--out", str(out)])
    raw = out.read_bytes()
    assert raw == first.encode() and b"\r" not in raw
    x, phi = np.loadtxt(out, delimiter=",", skiprows=1).T
    assert np.array_equal(phi, phi_r(x, NonlocalProblem(1.9)))


def test_lyapunov_matches_library_bit_for_bit(capsys):
    code, out, _ = run(["lyapunov", "--p", "3", "--q", "2", "--L", "1"], capsys)
    assert code == 0
    value = float(out.splitlines()[0].split("=")[1])
    assert value == best_constant(LyapunovInput(3.0, 2.0, 1.0)).best_constant
    assert "weight" in out


@pytest.mark.parametrize(
    "argv, expected, rel",
    [
        (["lyapunov", "--p", "2", "--q", "inf", "--L", "3.141592653589793"], 1.0, 1e-14),
        (["lyapunov", "--p", "2", "--q", "1.001", "--L", "1"], 4.0, 1e-2),
    ],
)
def test_lyapunov_limits(argv, expected, rel, capsys):
    _, out, _ = run(argv, capsys)
    assert float(out.splitlines()[0].split("=")[1]) == pytest.approx(expected, rel=rel)


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run(["verify", "hyper", "--seed", "7"], capsys)
    assert code == 0
    assert "fail=0" in out

    def broken(seed, config):
        rep = verify.VerificationReport("hyper", seed)
        rep.equal("broken", 1.0, 2.0, 1e-9)
        return rep

    monkeypatch.setitem(verify._RUNNERS, "hyper", broken)
    code, _, _ = run(["verify", "hyper"], capsys)
    assert code == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gtfkit", "eval", "pi", "--p", "2", "--q", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "3.14159265358979"
