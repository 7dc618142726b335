"""Randomized truncated T-SVD: power iteration and block Krylov variants.

The sketch tensor is drawn from a counter-based (Philox) generator in a
fixed element order before any computation, so results depend only on
the seed, never on thread count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import as_tensor, concat_lateral, spectral_norm, t_transpose
from .errors import DimensionError, RankError, SizeGuardError
from .factor import TsvdFactors, fourier_singular_values, tqr, tsvd, truncate_tsvd
from .fourier import tprod

__all__ = [
    "SketchParams",
    "KrylovBasis",
    "gaussian_tensor",
    "randomized_tsvd_power",
    "build_krylov_basis",
    "randomized_tsvd_block_krylov",
    "projector_residual_bound_check",
]

BASIS_FULL = "full"
BASIS_TRUNCATED = "truncated_to_R_plus_P"


@dataclass(frozen=True)
class SketchParams:
    """Parameters shared by both randomized algorithms.

    R: target tubal rank; P: oversampling; q: power / Krylov depth;
    basis_truncation: whether the Krylov basis Q is cut back to its first
    R + P lateral slices before projection (the cheaper default).
    """

    R: int
    P: int = 5
    q: int = 2
    seed: int = 0
    basis_truncation: str = BASIS_TRUNCATED

    def __post_init__(self) -> None:
        if self.R < 1:
            raise RankError(f"target rank must be >= 1, got {self.R}")
        if self.P < 0:
            raise RankError(f"oversampling must be >= 0, got {self.P}")
        if self.q < 0:
            raise RankError(f"depth must be >= 0, got {self.q}")
        if self.basis_truncation not in (BASIS_FULL, BASIS_TRUNCATED):
            raise RankError(f"unknown basis_truncation {self.basis_truncation!r}")

    def validate_for(self, shape: tuple[int, int, int]) -> None:
        limit = min(shape[0], shape[1])
        if self.R + self.P > limit:
            raise RankError(
                f"R + P = {self.R + self.P} exceeds min(n1, n2) = {limit}"
            )


@dataclass(frozen=True)
class KrylovBasis:
    """Lateral concatenation [K_0, ..., K_q] and its orthonormal T-QR basis."""

    K: np.ndarray
    Q: np.ndarray


def gaussian_tensor(n1: int, n2: int, n3: int, seed: int) -> np.ndarray:
    """Seeded i.i.d. standard-normal tensor; same seed gives identical bits."""
    rng = np.random.Generator(np.random.Philox(seed))
    return rng.standard_normal(n1 * n2 * n3).reshape(n1, n2, n3)


def randomized_tsvd_power(x: np.ndarray, params: SketchParams) -> TsvdFactors:
    """Classical randomized subspace method with q power iterations."""
    x = as_tensor(x)
    params.validate_for(x.shape)
    n1, n2, n3 = x.shape
    xt = t_transpose(x)
    y = tprod(x, gaussian_tensor(n2, params.R + params.P, n3, params.seed))
    for _ in range(params.q):
        y = tprod(x, tprod(xt, y))
    q_basis = tqr(y).Q
    c = tprod(t_transpose(q_basis), x)
    factors = truncate_tsvd(tsvd(c), params.R)
    return TsvdFactors(
        U=tprod(q_basis, factors.U), S=factors.S, V=factors.V
    )


def build_krylov_basis(x: np.ndarray, b: np.ndarray, q: int) -> KrylovBasis:
    """K_0 = X*B, K_i = X*X^T*K_{i-1}; returns K and its orthonormal basis."""
    x = as_tensor(x)
    b = as_tensor(b)
    if b.shape[0] != x.shape[1] or b.shape[2] != x.shape[2]:
        raise DimensionError(
            f"sketch tensor {b.shape} incompatible with target {x.shape}"
        )
    xt = t_transpose(x)
    blocks = [tprod(x, b)]
    for _ in range(q):
        blocks.append(tprod(x, tprod(xt, blocks[-1])))
    k = concat_lateral(blocks)
    return KrylovBasis(K=k, Q=tqr(k).Q)


def randomized_tsvd_block_krylov(x: np.ndarray, params: SketchParams) -> TsvdFactors:
    """Randomized block Krylov method for the truncated T-SVD.

    The sketch has first extent n2 so that X * B is well formed.  When the
    accumulated basis is wider than min(n1, n2), the economy T-QR caps it
    there and the cap is reported in the result metadata.
    """
    x = as_tensor(x)
    params.validate_for(x.shape)
    n1, n2, n3 = x.shape
    width = params.R + params.P
    b = gaussian_tensor(n2, width, n3, params.seed)
    basis = build_krylov_basis(x, b, params.q)
    meta: dict = {}
    requested = (params.q + 1) * width
    if basis.Q.shape[1] < requested:
        meta["basis_cap"] = basis.Q.shape[1]
    q_basis = basis.Q
    if params.basis_truncation == BASIS_TRUNCATED and q_basis.shape[1] > width:
        q_basis = q_basis[:, :width, :]
    c = tprod(t_transpose(q_basis), x)
    factors = tsvd(c)
    u_hat = tprod(q_basis, factors.U)
    out = truncate_tsvd(
        TsvdFactors(U=u_hat, S=factors.S, V=factors.V, meta=meta), params.R
    )
    return out


def projector_residual_bound_check(
    x: np.ndarray, q: int, seed: int, R: int = 3, P: int = 2
) -> tuple[float, float]:
    """Evaluate both sides of the Krylov projector residual bound.

    lhs = ||X - Q*Q^T*X||_2 with Q the full Krylov basis; rhs is the top
    Fourier singular value of Z = [X, (XX^T)X, ..., (XX^T)^q X] raised to
    1 / (2q + 1).  Callers assert lhs <= rhs + small slack.
    """
    x = as_tensor(x)
    n1, n2, n3 = x.shape
    if n1 * n3 > 200:
        raise SizeGuardError(f"bound check limited to n1*n3 <= 200, got {n1 * n3}")
    b = gaussian_tensor(n2, R + P, n3, seed)
    basis = build_krylov_basis(x, b, q)
    projected = tprod(basis.Q, tprod(t_transpose(basis.Q), x))
    lhs = spectral_norm(x - projected)

    xt = t_transpose(x)
    blocks = [x]
    for _ in range(q):
        blocks.append(tprod(x, tprod(xt, blocks[-1])))
    z = concat_lateral(blocks)
    sigma_max = float(fourier_singular_values(z).max())
    rhs = sigma_max ** (1.0 / (2 * q + 1))
    return lhs, rhs
