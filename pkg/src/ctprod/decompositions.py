"""Tensor factorizations under the C-product.

Each decomposition factors the transform slices independently with the matrix
kernels and maps the assembled factors back through the inverse transform.
The three rank-conditional decompositions (full-rank, QDR, HS) require every
transform slice to have the same numerical rank and raise
:class:`~ctprod.errors.RankMismatch` (carrying the per-slice ranks) otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RankMismatch, ShapeMismatch
from .kernels import full_rank_matrix, numerical_rank, qdr_matrix, qr_matrix, schur_matrix, svd_matrix
from .product import conj_transpose, cprod
from .tensor import BlockPartition2x2, Tensor3, block_compose
from .transform import TransformContext, tensor_from_transform_slices, transform_slices

__all__ = [
    "CSvd",
    "CQr",
    "CSchur",
    "CFullRank",
    "CQdr",
    "CHs",
    "CoreNilpotentParts",
    "c_svd",
    "c_qr",
    "c_schur",
    "c_full_rank",
    "c_qdr",
    "c_hs",
    "core_nilpotent_parts",
]


@dataclass(frozen=True)
class CSvd:
    """A = U *c S *c V^H with U, V unitary under *c and S F-diagonal."""

    U: Tensor3
    S: Tensor3
    V: Tensor3

    def reconstruct(self, ctx: TransformContext) -> Tensor3:
        return cprod(cprod(self.U, self.S, ctx), conj_transpose(self.V, ctx), ctx)


@dataclass(frozen=True)
class CQr:
    """A = Q *c R with Q unitary under *c and R F-upper."""

    Q: Tensor3
    R: Tensor3

    def reconstruct(self, ctx: TransformContext) -> Tensor3:
        return cprod(self.Q, self.R, ctx)


@dataclass(frozen=True)
class CSchur:
    """A = Q^H *c T *c Q with Q unitary under *c and T F-upper."""

    Q: Tensor3
    T: Tensor3

    def reconstruct(self, ctx: TransformContext) -> Tensor3:
        qh = conj_transpose(self.Q, ctx)
        return cprod(cprod(qh, self.T, ctx), self.Q, ctx)


@dataclass(frozen=True)
class CFullRank:
    """A = Mfac *c Nfac with equal transform-slice rank r."""

    Mfac: Tensor3
    Nfac: Tensor3
    r: int

    def reconstruct(self, ctx: TransformContext) -> Tensor3:
        return cprod(self.Mfac, self.Nfac, ctx)


@dataclass(frozen=True)
class CQdr:
    """A = Q *c D *c R with D an invertible F-diagonal r x r x n3 tensor."""

    Q: Tensor3
    D: Tensor3
    R: Tensor3
    r: int

    def reconstruct(self, ctx: TransformContext) -> Tensor3:
        return cprod(cprod(self.Q, self.D, ctx), self.R, ctx)


def _stack_2x2(a11: Tensor3, a12: Tensor3, a21: Tensor3, a22: Tensor3) -> Tensor3:
    """Block-compose that also accepts zero-width blocks."""
    return block_compose(
        BlockPartition2x2(split=(a11.n1, a11.n2), a11=a11, a12=a12, a21=a21, a22=a22)
    )


@dataclass(frozen=True)
class CHs:
    """A = U *c [[Sr*cK, Sr*cL], [O, O]] *c U^H.

    U is unitary, Sr is the invertible F-diagonal r x r x n3 head of the
    singular-value tensor, and (K, Lblk) is the top block row of V^H *c U,
    satisfying K *c K^H + Lblk *c Lblk^H = identity (r x r x n3).
    """

    U: Tensor3
    Sr: Tensor3
    K: Tensor3
    Lblk: Tensor3
    r: int

    def middle(self, ctx: TransformContext) -> Tensor3:
        n = self.U.n1
        r = self.r
        n3 = self.U.n3
        return _stack_2x2(
            cprod(self.Sr, self.K, ctx),
            cprod(self.Sr, self.Lblk, ctx),
            Tensor3.zeros(n - r, r, n3),
            Tensor3.zeros(n - r, n - r, n3),
        )

    def reconstruct(self, ctx: TransformContext) -> Tensor3:
        uh = conj_transpose(self.U, ctx)
        return cprod(cprod(self.U, self.middle(ctx), ctx), uh, ctx)


@dataclass(frozen=True)
class CoreNilpotentParts:
    """A = coreC + nilN with coreC = A^2 *c A^D and nilN^k = O."""

    coreC: Tensor3
    nilN: Tensor3
    k: int


def c_svd(A: Tensor3, ctx: TransformContext) -> CSvd:
    """Singular value decomposition under the C-product (slicewise SVD)."""
    ah = transform_slices(A, ctx)
    us, ss, vs = [], [], []
    for a in ah:
        d = svd_matrix(a)
        us.append(d.U)
        ss.append(d.sigma())
        vs.append(d.V)
    return CSvd(
        U=tensor_from_transform_slices(np.stack(us), ctx),
        S=tensor_from_transform_slices(np.stack(ss), ctx),
        V=tensor_from_transform_slices(np.stack(vs), ctx),
    )


def c_qr(A: Tensor3, ctx: TransformContext) -> CQr:
    """QR decomposition under the C-product (slicewise Householder QR)."""
    ah = transform_slices(A, ctx)
    qs, rs = [], []
    for a in ah:
        f = qr_matrix(a)
        qs.append(f.Q)
        rs.append(f.R)
    return CQr(
        Q=tensor_from_transform_slices(np.stack(qs), ctx),
        R=tensor_from_transform_slices(np.stack(rs), ctx),
    )


def c_schur(A: Tensor3, ctx: TransformContext) -> CSchur:
    """Schur decomposition under the C-product; requires square A."""
    if A.n1 != A.n2:
        raise ShapeMismatch(f"dims {A.dims} are not square")
    ah = transform_slices(A, ctx)
    qs, ts = [], []
    for a in ah:
        f = schur_matrix(a)
        qs.append(f.Q)
        ts.append(f.T)
    return CSchur(
        Q=tensor_from_transform_slices(np.stack(qs), ctx),
        T=tensor_from_transform_slices(np.stack(ts), ctx),
    )


def _equal_slice_ranks(ah: np.ndarray, tol: float | None) -> int:
    ranks = [numerical_rank(a, tol) for a in ah]
    if len(set(ranks)) > 1:
        raise RankMismatch(ranks)
    return ranks[0]


def c_full_rank(A: Tensor3, ctx: TransformContext, tol: float | None = None) -> CFullRank:
    """Full-rank decomposition A = Mfac *c Nfac; requires equal slice ranks."""
    ah = transform_slices(A, ctx)
    r = _equal_slice_ranks(ah, tol)
    ms, ns = [], []
    for a in ah:
        f = full_rank_matrix(a, tol)
        ms.append(f.M)
        ns.append(f.N)
    return CFullRank(
        Mfac=tensor_from_transform_slices(np.stack(ms), ctx),
        Nfac=tensor_from_transform_slices(np.stack(ns), ctx),
        r=r,
    )


def c_qdr(A: Tensor3, ctx: TransformContext, tol: float | None = None) -> CQdr:
    """QDR decomposition A = Q *c D *c R; requires equal slice ranks."""
    ah = transform_slices(A, ctx)
    r = _equal_slice_ranks(ah, tol)
    qs, ds, rs = [], [], []
    for a in ah:
        f = qdr_matrix(a, tol)
        qs.append(f.Q)
        ds.append(f.D)
        rs.append(f.R)
    return CQdr(
        Q=tensor_from_transform_slices(np.stack(qs), ctx),
        D=tensor_from_transform_slices(np.stack(ds), ctx),
        R=tensor_from_transform_slices(np.stack(rs), ctx),
        r=r,
    )


def c_hs(A: Tensor3, ctx: TransformContext, tol: float | None = None) -> CHs:
    """Block factorization through the C-SVD of a square tensor.

    Partitions V^H *c U at the shared slice rank r: the top block row gives
    K (r x r x n3) and Lblk (r x (n-r) x n3).  Requires equal slice ranks.
    """
    if A.n1 != A.n2:
        raise ShapeMismatch(f"dims {A.dims} are not square")
    ah = transform_slices(A, ctx)
    r = _equal_slice_ranks(ah, tol)
    d = c_svd(A, ctx)
    # Sub-blocks in storage match sub-blocks of every transform slice because
    # the transform acts along tubes only.
    Sr = Tensor3(d.S.slices[:, :r, :r])
    W = cprod(conj_transpose(d.V, ctx), d.U, ctx)
    return CHs(
        U=d.U,
        Sr=Sr,
        K=Tensor3(W.slices[:, :r, :r]),
        Lblk=Tensor3(W.slices[:, :r, r:]),
        r=r,
    )


def core_nilpotent_parts(
    A: Tensor3, ctx: TransformContext, tol: float | None = None
) -> CoreNilpotentParts:
    """Split a square tensor into its core and nilpotent parts.

    coreC = A^2 *c A^D and nilN = A - coreC, with nilN^k = O for k the
    tensor index of A.
    """
    from .geninv import drazin_inverse, tensor_index

    k = tensor_index(A, ctx, tol)
    ad = drazin_inverse(A, ctx, tol=tol).X
    coreC = cprod(cprod(A, A, ctx), ad, ctx)
    return CoreNilpotentParts(coreC=coreC, nilN=A - coreC, k=k)
