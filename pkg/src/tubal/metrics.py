"""Quality metrics, run reports, and synthetic low-tubal-rank test tensors."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import as_tensor, t_transpose
from .errors import DimensionError
from .factor import tqr
from .fourier import tprod
from .sketch import gaussian_tensor

__all__ = ["RunReport", "relative_error", "psnr", "synthetic_case"]


@dataclass
class RunReport:
    """Metrics record for one algorithm run."""

    algorithm: str
    R: int
    P: int
    q: int
    seed: int
    relative_error: float
    psnr_db: float | None = None
    runtime_ms: int = 0
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {
            "algorithm": self.algorithm,
            "R": self.R,
            "P": self.P,
            "q": self.q,
            "seed": self.seed,
            "relative_error": self.relative_error,
            "runtime_ms": self.runtime_ms,
        }
        if self.psnr_db is not None:
            d["psnr_db"] = "inf" if math.isinf(self.psnr_db) else self.psnr_db
        if self.extra:
            d["extra"] = self.extra
        return d


def relative_error(x: np.ndarray, xhat: np.ndarray) -> float:
    """||x - xhat||_F / ||x||_F."""
    x = as_tensor(x)
    xhat = as_tensor(xhat)
    if x.shape != xhat.shape:
        raise DimensionError(f"shape mismatch {x.shape} vs {xhat.shape}")
    ref = np.linalg.norm(x)
    if ref == 0.0:
        raise ValueError("relative error undefined for a zero reference tensor")
    return float(np.linalg.norm(x - xhat) / ref)


def psnr(x: np.ndarray, y: np.ndarray) -> float:
    """Peak signal-to-noise ratio in dB on the 0..255 scale (inf if identical)."""
    x = as_tensor(x)
    y = as_tensor(y)
    if x.shape != y.shape:
        raise DimensionError(f"shape mismatch {x.shape} vs {y.shape}")
    mse = float(np.mean((x - y) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(255.0**2 / mse)


# prescribed per-index singular value profiles, by case number
_CASE_SPECTRA = {
    1: lambda m: 1.0 / m**5,
    2: lambda m: 1.0 / m**6,
    3: lambda m: 0.5**m,
}


def synthetic_case(n: int, case: int, seed: int = 0) -> np.ndarray:
    """n x n x n tensor whose Fourier slices all share the case's spectrum.

    X = U0 * S0 * V0^T with random orthogonal U0, V0 (T-QR of seeded
    Gaussian tensors) and S0 carrying diag(sigma_1..sigma_n) on every
    Fourier slice, i.e. an impulse in slice 1 spatially.
    """
    if case not in _CASE_SPECTRA:
        raise ValueError(f"case must be 1, 2 or 3, got {case}")
    if n < 1:
        raise ValueError(f"extent must be positive, got {n}")
    sigma = np.array([_CASE_SPECTRA[case](m) for m in range(1, n + 1)])
    u0 = tqr(gaussian_tensor(n, n, n, seed)).Q
    v0 = tqr(gaussian_tensor(n, n, n, seed + 1)).Q
    s0 = np.zeros((n, n, n))
    s0[:, :, 0] = np.diag(sigma)
    return tprod(tprod(u0, s0), t_transpose(v0))
