"""Fixture builders shared across the test modules."""

from __future__ import annotations

import numpy as np

from ctprod import Tensor3, TransformContext, tensor_from_transform_slices


def random_tensor(rng: np.random.Generator, n1: int, n2: int, n3: int, complex_: bool = False) -> Tensor3:
    arr = rng.standard_normal((n3, n1, n2))
    if complex_:
        arr = arr + 1j * rng.standard_normal((n3, n1, n2))
    return Tensor3(arr)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    q, _ = np.linalg.qr(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    return q


def equal_rank_tensor(
    rng: np.random.Generator,
    n1: int,
    n2: int,
    r: int,
    ctx: TransformContext,
    complex_: bool = True,
) -> Tensor3:
    """Every transform slice has exact rank r with singular values in [1, 2],
    so the numerical rank is unambiguous."""
    hats = []
    for _ in range(ctx.n3):
        u = random_unitary(rng, n1)
        v = random_unitary(rng, n2)
        s = np.zeros((n1, n2), dtype=np.complex128)
        s[:r, :r] = np.diag(rng.uniform(1.0, 2.0, r))
        hats.append(u @ s @ v.conj().T)
    A = tensor_from_transform_slices(np.stack(hats), ctx)
    if not complex_:
        A = Tensor3(A.slices.real)
    return A


def index_two_tensor(rng: np.random.Generator, n: int, ctx: TransformContext) -> Tensor3:
    """Every transform slice is similar to blkdiag(C, N) with C invertible
    (n-2 x n-2) and N the 2 x 2 upshift, so the tensor index is exactly 2."""
    if n < 3:
        raise ValueError("need n >= 3 to fit an invertible core next to the nilpotent block")
    hats = []
    for _ in range(ctx.n3):
        p = np.eye(n) + 0.3 * rng.standard_normal((n, n))
        core = rng.uniform(1.0, 2.0) * np.eye(n - 2) + 0.3 * rng.standard_normal((n - 2, n - 2))
        blk = np.zeros((n, n))
        blk[: n - 2, : n - 2] = core
        blk[n - 2, n - 1] = 1.0
        hats.append(p @ blk @ np.linalg.inv(p))
    return tensor_from_transform_slices(np.stack(hats).astype(np.complex128), ctx)


def stochastic_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    m = rng.uniform(0.2, 1.0, (n, n))
    return m / m.sum(axis=0, keepdims=True)


def transform_stochastic_tensor(rng: np.random.Generator, n: int, ctx: TransformContext) -> Tensor3:
    """A strictly positive transition tensor that is column stochastic in the
    transform domain (all transform slices equal one stochastic matrix)."""
    from ctprod import transition_from_transform_slices

    base = stochastic_matrix(rng, n)
    return transition_from_transform_slices(np.stack([base] * ctx.n3), ctx)
