"""Command-line interface: happy paths, exit codes, and determinism."""

import numpy as np
import pytest

from ctprod import (
    Tensor3,
    build_context,
    check_penrose,
    cprod,
    max_abs_diff,
    parse_tensor_file,
    tensor_from_transform_slices,
    write_tensor_file,
)
from ctprod.cli import main

from helpers import index_two_tensor, random_tensor, stochastic_matrix


def write(tmp_path, name, tensor):
    path = tmp_path / name
    path.write_bytes(write_tensor_file(tensor))
    return str(path)


@pytest.fixture
def square(tmp_path):
    rng = np.random.default_rng(0)
    A = random_tensor(rng, 3, 3, 2)
    return A, write(tmp_path, "a.ct", A)


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cprod(tmp_path, capsys):
    rng = np.random.default_rng(1)
    A = random_tensor(rng, 2, 3, 2)
    B = random_tensor(rng, 3, 4, 2)
    code, out, _ = run(capsys, "cprod", write(tmp_path, "a.ct", A), write(tmp_path, "b.ct", B))
    assert code == 0
    got = parse_tensor_file(out)
    assert max_abs_diff(got, cprod(A, B, build_context(2))) == 0.0


def test_pinv_writes_file_and_stdout_identically(square, tmp_path, capsys):
    A, path = square
    out_file = tmp_path / "x.ct"
    code, out, _ = run(capsys, "pinv", path, "-o", str(out_file))
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "pinv", path)
    assert code == 0
    assert out_file.read_bytes().decode() == out
    X = parse_tensor_file(out)
    assert max(check_penrose(A, X, build_context(2)).values()) < 1e-10


@pytest.mark.parametrize("method", ["slicewise", "svd", "qr", "schur", "fullrank", "qdr", "hs"])
def test_pinv_methods(square, capsys, method):
    _, path = square
    code, out, _ = run(capsys, "pinv", path, "--method", method)
    assert code == 0 and out.startswith("ct-tensor 1")


def test_drazin_reports_index(square, capsys):
    _, path = square
    code, out, err = run(capsys, "drazin", path)
    assert code == 0
    assert "# index 0" in err
    assert out.startswith("ct-tensor 1")


def test_group_rejects_high_index(tmp_path, capsys):
    rng = np.random.default_rng(2)
    ctx = build_context(2)
    A = index_two_tensor(rng, 4, ctx)
    code, _, err = run(capsys, "group", write(tmp_path, "a.ct", A))
    assert code == 1
    assert "error:" in err


def test_along(tmp_path, capsys):
    rng = np.random.default_rng(3)
    A = random_tensor(rng, 3, 3, 2)
    G = random_tensor(rng, 3, 3, 2)
    code, out, _ = run(capsys, "along", write(tmp_path, "a.ct", A), write(tmp_path, "g.ct", G))
    assert code == 0 and out.startswith("ct-tensor 1")


def test_index(square, capsys):
    _, path = square
    code, out, _ = run(capsys, "index", path)
    assert code == 0
    assert out.strip() == "0"


def test_decomp_stream_and_files(square, tmp_path, capsys):
    _, path = square
    code, out, err = run(capsys, "decomp", path, "--kind", "qdr")
    assert code == 0
    assert out.count("# factor") == 3
    assert "# rank 3" in err
    prefix = tmp_path / "f"
    code, out, _ = run(capsys, "decomp", path, "--kind", "qdr", "-o", str(prefix))
    assert code == 0 and out == ""
    for name in ("Q", "D", "R"):
        assert (tmp_path / f"f.{name}.ct").exists()


def test_decomp_rank_mismatch_is_domain_error(tmp_path, capsys):
    ctx = build_context(2)
    hats = np.stack([np.eye(2), np.diag([1.0, 0.0])]).astype(complex)
    A = tensor_from_transform_slices(hats, ctx)
    code, _, err = run(capsys, "decomp", write(tmp_path, "a.ct", A), "--kind", "fullrank")
    assert code == 1
    assert "unequal ranks" in err


def test_markov(tmp_path, capsys):
    rng = np.random.default_rng(4)
    ctx = build_context(2)
    base = stochastic_matrix(rng, 3)
    P = tensor_from_transform_slices(np.stack([base] * 2), ctx)
    path = write(tmp_path, "p.ct", P)
    code, out, err = run(capsys, "markov", path)
    assert code == 0 and out.startswith("ct-tensor 1")
    code, out, err = run(capsys, "markov", path, "--estimator", "cesaro", "--steps", "4")
    assert code == 0
    assert len([l for l in err.splitlines() if l.startswith("# step")]) == 4


def test_markov_rejects_bad_alpha(tmp_path, capsys):
    rng = np.random.default_rng(5)
    ctx = build_context(2)
    P = tensor_from_transform_slices(np.stack([stochastic_matrix(rng, 2)] * 2), ctx)
    code, _, err = run(
        capsys, "markov", write(tmp_path, "p.ct", P), "--estimator", "alpha", "--alpha", "1.5"
    )
    assert code == 2
    assert "alpha" in err


def test_markov_rejects_nonstochastic(square, capsys):
    _, path = square
    code, _, err = run(capsys, "markov", path)
    assert code == 1
    assert "not a transition tensor" in err


def test_check_mp(square, tmp_path, capsys):
    A, path = square
    code, out, _ = run(capsys, "pinv", path, "-o", str(tmp_path / "x.ct"))
    assert code == 0
    code, out, _ = run(capsys, "check", path, str(tmp_path / "x.ct"), "--relation", "mp")
    assert code == 0
    lines = dict(l.split() for l in out.splitlines())
    assert set(lines) == {"axa", "xax", "ax_hermitian", "xa_hermitian"}
    assert all(float(v) < 1e-10 for v in lines.values())


def test_check_along_needs_three_files(square, capsys):
    _, path = square
    code, _, err = run(capsys, "check", path, path, "--relation", "along")
    assert code == 2
    assert "takes 3 files" in err


def test_missing_file_is_exit_two(capsys):
    code, _, err = run(capsys, "pinv", "no-such-file.ct")
    assert code == 2
    assert "error:" in err


def test_malformed_file_is_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.ct"
    bad.write_text("ct-tensor 9\n")
    code, _, err = run(capsys, "pinv", str(bad))
    assert code == 2
    assert "line 1" in err


def test_shape_mismatch_is_exit_one(tmp_path, capsys):
    rng = np.random.default_rng(6)
    A = random_tensor(rng, 2, 3, 2)
    B = random_tensor(rng, 2, 3, 2)
    code, _, err = run(capsys, "cprod", write(tmp_path, "a.ct", A), write(tmp_path, "b.ct", B))
    assert code == 1
    assert "cannot multiply" in err


def test_usage_errors_exit_two(capsys):
    assert main(["pinv"]) == 2  # missing positional
    capsys.readouterr()
    assert main(["decomp", "x.ct", "--kind", "cholesky"]) == 2  # bad choice
    capsys.readouterr()
    assert main([]) == 2  # no subcommand
    capsys.readouterr()


def test_help_and_version_exit_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
    assert main(["--version"]) == 0
    out = capsys.readouterr().out
    assert "ctprod" in out
