"""Brute-force block-circulant reference paths.

Everything here materializes dense (n1*n3) x (n2*n3) matrices and is
meant for tests and small theory checks only; hard size guards keep the
cost bounded.  The FFT-domain modules are validated against these paths.
"""

from __future__ import annotations

import numpy as np

from .core import as_tensor
from .errors import DimensionError, SizeGuardError

__all__ = [
    "bcirc",
    "unfold",
    "fold",
    "reference_tprod",
    "t_eigenvalues",
    "reference_spectral_norm",
]

_MAX_BCIRC_SIDE = 2000


def _guard(x: np.ndarray) -> None:
    n1, n2, n3 = x.shape
    if n1 * n3 > _MAX_BCIRC_SIDE or n2 * n3 > _MAX_BCIRC_SIDE:
        raise SizeGuardError(
            f"bcirc of a {n1}x{n2}x{n3} tensor exceeds the {_MAX_BCIRC_SIDE} side guard"
        )


def bcirc(x: np.ndarray) -> np.ndarray:
    """Dense block-circulant matrix: block (r, c) is slice 1 + (r - c) mod n3."""
    x = as_tensor(x)
    _guard(x)
    n1, n2, n3 = x.shape
    out = np.empty((n1 * n3, n2 * n3))
    for r in range(n3):
        for c in range(n3):
            out[r * n1 : (r + 1) * n1, c * n2 : (c + 1) * n2] = x[:, :, (r - c) % n3]
    return out


def unfold(x: np.ndarray) -> np.ndarray:
    """Stack frontal slices vertically into an (n1*n3) x n2 matrix."""
    x = as_tensor(x)
    n1, n2, n3 = x.shape
    return np.moveaxis(x, 2, 0).reshape(n3 * n1, n2)


def fold(m: np.ndarray, n1: int, n3: int) -> np.ndarray:
    """Inverse of unfold."""
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != n1 * n3:
        raise DimensionError(
            f"cannot fold a {m.shape} matrix into n1={n1}, n3={n3} blocks"
        )
    return np.moveaxis(m.reshape(n3, n1, m.shape[1]), 0, 2)


def reference_tprod(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Spatial-domain t-product fold(bcirc(x) @ unfold(y))."""
    x = as_tensor(x)
    y = as_tensor(y)
    if x.shape[1] != y.shape[0] or x.shape[2] != y.shape[2]:
        raise DimensionError(
            f"t-product needs (n1,n2,n3)*(n2,n4,n3); got {x.shape} * {y.shape}"
        )
    return fold(bcirc(x) @ unfold(y), x.shape[0], x.shape[2])


def t_eigenvalues(x: np.ndarray) -> np.ndarray:
    """Eigenvalues of bcirc(x) for a tensor square in its first two modes."""
    x = as_tensor(x)
    if x.shape[0] != x.shape[1]:
        raise DimensionError(f"t-eigenvalues need a square tensor, got {x.shape}")
    return np.linalg.eigvals(bcirc(x))


def reference_spectral_norm(x: np.ndarray) -> float:
    """Largest singular value of the dense bcirc matrix."""
    x = as_tensor(x)
    if x.size == 0:
        return 0.0
    return float(np.linalg.svd(bcirc(x), compute_uv=False).max(initial=0.0))
