"""Dense third-order tensor value type and structural operations.

A tensor of extents (n1, n2, n3) is stored as a float64 ``numpy.ndarray``
of shape ``(n1, n2, n3)``.  Index k selects the k-th frontal slice
``x[:, :, k]``; index pair (i, j) addresses a tube ``x[i, j, :]``.  The
canonical linear layout (used by ``make_tensor`` and the binary file
format) is slice-major: k outermost, then rows, then columns.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DimensionError

__all__ = [
    "make_tensor",
    "as_tensor",
    "frontal_slice",
    "t_transpose",
    "identity_tensor",
    "concat_lateral",
    "fro_norm",
    "spectral_norm",
]


def as_tensor(x: np.ndarray) -> np.ndarray:
    """Validate an ndarray as a third-order tensor and return it as float64."""
    a = np.asarray(x, dtype=np.float64)
    if a.ndim != 3:
        raise DimensionError(f"expected a third-order tensor, got ndim={a.ndim}")
    if a.size and not np.all(np.isfinite(a)):
        raise ValueError("tensor contains non-finite entries")
    return a


def make_tensor(n1: int, n2: int, n3: int, data: Sequence[float]) -> np.ndarray:
    """Build an (n1, n2, n3) tensor from values in slice-major, row-major order."""
    if n1 < 1 or n2 < 1 or n3 < 1:
        raise DimensionError(f"extents must be positive, got ({n1}, {n2}, {n3})")
    flat = np.asarray(data, dtype=np.float64).ravel()
    if flat.size != n1 * n2 * n3:
        raise DimensionError(
            f"need {n1 * n2 * n3} values for a {n1}x{n2}x{n3} tensor, got {flat.size}"
        )
    if not np.all(np.isfinite(flat)):
        raise ValueError("tensor data contains non-finite entries")
    return np.transpose(flat.reshape(n3, n1, n2), (1, 2, 0))


def frontal_slice(x: np.ndarray, k: int) -> np.ndarray:
    """Return the k-th frontal slice (1-based) as an n1 x n2 matrix copy."""
    x = as_tensor(x)
    n3 = x.shape[2]
    if not 1 <= k <= n3:
        raise IndexError(f"frontal slice index {k} out of range 1..{n3}")
    return x[:, :, k - 1].copy()


def t_transpose(x: np.ndarray) -> np.ndarray:
    """Transpose each frontal slice and reverse the order of slices 2..n3."""
    x = as_tensor(x)
    y = np.transpose(x, (1, 0, 2))
    out = np.empty_like(y)
    out[:, :, 0] = y[:, :, 0]
    out[:, :, 1:] = y[:, :, :0:-1]
    return out


def identity_tensor(n: int, n3: int) -> np.ndarray:
    """Identity tensor: first frontal slice I_n, remaining slices zero."""
    if n < 1 or n3 < 1:
        raise DimensionError(f"extents must be positive, got ({n}, {n3})")
    out = np.zeros((n, n, n3))
    out[:, :, 0] = np.eye(n)
    return out


def concat_lateral(parts: Sequence[np.ndarray]) -> np.ndarray:
    """Concatenate tensors along the lateral (second) mode, order preserved."""
    if not parts:
        raise DimensionError("concat_lateral requires at least one tensor")
    tensors = [as_tensor(p) for p in parts]
    n1, _, n3 = tensors[0].shape
    for t in tensors[1:]:
        if t.shape[0] != n1 or t.shape[2] != n3:
            raise DimensionError(
                f"lateral blocks must share n1 and n3; got {t.shape} vs ({n1}, _, {n3})"
            )
    return np.concatenate(tensors, axis=1)


def fro_norm(x: np.ndarray) -> float:
    """Frobenius norm sqrt(sum of squared entries)."""
    return float(np.linalg.norm(as_tensor(x)))


def spectral_norm(x: np.ndarray) -> float:
    """Largest matrix 2-norm over the Fourier-domain frontal slices.

    Equals the 2-norm of the block-circulant matrix of x; see the oracle
    module for the dense cross-check path.  Only the non-redundant half of
    the spectrum is examined (conjugate slices share singular values).
    """
    x = as_tensor(x)
    if x.size == 0:
        return 0.0
    n3 = x.shape[2]
    half = n3 // 2 + 1
    xf = np.fft.fft(x, axis=2)[:, :, :half]
    # singular values of each of the retained slices
    s = np.linalg.svd(np.moveaxis(xf, 2, 0), compute_uv=False)
    return float(s.max(initial=0.0))
