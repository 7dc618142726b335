"""Deterministic factorizations under the t-product.

All routines factor the non-redundant Fourier slices with standard dense
LAPACK calls and mirror the conjugate slices, then transform back.  Sign
conventions of the per-slice factors are whatever LAPACK returns; callers
should compare reconstructions or projectors, never raw factor entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import as_tensor
from .errors import NumericalError, RankError
from .fourier import FourierTensor3, half_slice_count, half_spectrum, idft_mode3

__all__ = [
    "TqrFactors",
    "TsvdFactors",
    "tqr",
    "tsvd",
    "truncate_tsvd",
    "pinv",
    "tubal_rank",
    "fourier_singular_values",
]


@dataclass(frozen=True)
class TqrFactors:
    """Economy T-QR pair with tprod(Q, R) reconstructing the input."""

    Q: np.ndarray
    R: np.ndarray


@dataclass(frozen=True)
class TsvdFactors:
    """T-SVD triple: X ~ U * S * t_transpose(V).

    Every Fourier slice of S is diagonal with nonnegative entries sorted
    descending; the spatial S is dense in its tubes, only the Fourier view
    is diagonal.  meta carries advisory notes (e.g. a basis-width cap).
    """

    U: np.ndarray
    S: np.ndarray
    V: np.ndarray
    meta: dict = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return self.U.shape[1]


def _spatialize(stack: np.ndarray, n3: int) -> np.ndarray:
    """Mirror a (half, m, n) slice stack to all n3 slices and inverse-DFT."""
    half, m, n = stack.shape
    full = np.empty((m, n, n3), dtype=np.complex128)
    full[:, :, :half] = np.moveaxis(stack, 0, 2)
    for i in range(half, n3):
        full[:, :, i] = np.conj(full[:, :, n3 - i])
    return idft_mode3(FourierTensor3(full))


def tqr(x: np.ndarray) -> TqrFactors:
    """Economy T-QR via slice-wise QR in the Fourier domain."""
    x = as_tensor(x)
    n3 = x.shape[2]
    xf = half_spectrum(x)
    qf, rf = np.linalg.qr(xf, mode="reduced")
    return TqrFactors(Q=_spatialize(qf, n3), R=_spatialize(rf, n3))


def tsvd(x: np.ndarray) -> TsvdFactors:
    """Full (economy) T-SVD with r = min(n1, n2)."""
    x = as_tensor(x)
    n1, n2, n3 = x.shape
    half = half_slice_count(n3)
    xf = half_spectrum(x)
    try:
        uf, sf, vhf = np.linalg.svd(xf, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        # retry slice by slice to report which one failed
        for i in range(half):
            try:
                np.linalg.svd(xf[i], full_matrices=False)
            except np.linalg.LinAlgError:
                raise NumericalError(f"SVD failed on Fourier slice {i + 1}") from exc
        raise NumericalError("SVD failed") from exc
    r = min(n1, n2)
    sdiag = np.zeros((half, r, r), dtype=np.complex128)
    idx = np.arange(r)
    sdiag[:, idx, idx] = sf
    # spatial V must satisfy Fourier slices of t_transpose(V) == vhf
    vf = np.conj(np.transpose(vhf, (0, 2, 1)))
    return TsvdFactors(
        U=_spatialize(uf, n3), S=_spatialize(sdiag, n3), V=_spatialize(vf, n3)
    )


def truncate_tsvd(f: TsvdFactors, R: int) -> TsvdFactors:
    """Keep the leading R lateral slices of U, V and the R x R block of S."""
    r = f.rank
    if not 1 <= R <= r:
        raise RankError(f"truncation rank {R} out of range 1..{r}")
    return TsvdFactors(
        U=f.U[:, :R, :], S=f.S[:R, :R, :], V=f.V[:, :R, :], meta=dict(f.meta)
    )


def pinv(x: np.ndarray) -> np.ndarray:
    """Moore-Penrose pseudoinverse under the t-product (n2 x n1 x n3)."""
    x = as_tensor(x)
    n3 = x.shape[2]
    xf = half_spectrum(x)
    cf = np.linalg.pinv(xf)
    return _spatialize(cf, n3)


def fourier_singular_values(x: np.ndarray) -> np.ndarray:
    """Singular values of the non-redundant Fourier slices, shape (half, r)."""
    x = as_tensor(x)
    return np.linalg.svd(half_spectrum(x), compute_uv=False)


def tubal_rank(x: np.ndarray, tol: float | None = None) -> int:
    """Number of singular tubes whose largest Fourier value exceeds tol."""
    x = as_tensor(x)
    if tol is not None and tol < 0:
        raise ValueError("tolerance must be nonnegative")
    s = fourier_singular_values(x)
    if s.size == 0:
        return 0
    smax_per_index = s.max(axis=0)
    if tol is None:
        tol = max(x.shape[0], x.shape[1]) * np.finfo(np.float64).eps * smax_per_index[0]
    return int(np.count_nonzero(smax_per_index > tol))
