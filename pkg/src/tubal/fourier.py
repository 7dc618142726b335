"""Mode-3 DFT machinery and the t-product.

Conventions are pinned to the fft/ifft pair: unnormalized forward
transform, 1/n3 on the inverse.  Every FFT-domain algorithm in this
package touches only frontal slices 1..ceil((n3+1)/2) and fills the
rest by conjugate symmetry, mirroring the loop structure used for the
t-product, T-QR, T-SVD and pseudoinverse computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import as_tensor
from .errors import DimensionError, SymmetryError

__all__ = [
    "FourierTensor3",
    "half_slice_count",
    "dft_mode3",
    "idft_mode3",
    "map_fourier_slices",
    "tprod",
]

# relative tolerance for discarding imaginary parts of a real round-trip
_IMAG_DISCARD_RTOL = 1e-9
# relative imaginary residue beyond which the spectrum is considered corrupt
_IMAG_ERROR_RTOL = 1e-6


@dataclass(frozen=True)
class FourierTensor3:
    """Complex tensor after a DFT along mode 3.

    symmetry_valid means slices k > ceil((n3+1)/2) equal the conjugate of
    slice n3 - k + 2, which holds whenever the source tensor was real.
    """

    data: np.ndarray
    symmetry_valid: bool = True

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.data.shape  # type: ignore[return-value]


def half_slice_count(n3: int) -> int:
    """Number of non-redundant frontal slices, ceil((n3 + 1) / 2)."""
    return n3 // 2 + 1


def half_spectrum(x: np.ndarray) -> np.ndarray:
    """Non-redundant Fourier slices as a (half, n1, n2) stack.

    The DC slice (and the Nyquist slice for even n3) of a real tensor is
    exactly real; the floating-point dust left there by the FFT is dropped
    so that ill-conditioned slice factorizations cannot amplify it into a
    genuinely complex factor.
    """
    n3 = x.shape[2]
    half = half_slice_count(n3)
    xf = np.fft.fft(x, axis=2)[:, :, :half].copy()
    xf[:, :, 0] = xf[:, :, 0].real
    if n3 % 2 == 0:
        xf[:, :, half - 1] = xf[:, :, half - 1].real
    return np.moveaxis(xf, 2, 0)


def dft_mode3(x: np.ndarray) -> FourierTensor3:
    """Unnormalized forward DFT of every tube x(i, j, :)."""
    x = as_tensor(x)
    return FourierTensor3(np.fft.fft(x, axis=2), symmetry_valid=True)


def idft_mode3(xf: FourierTensor3) -> np.ndarray:
    """Inverse DFT (1/n3 per tube); imaginary residue is checked and dropped."""
    y = np.fft.ifft(np.asarray(xf.data, dtype=np.complex128), axis=2)
    real = np.ascontiguousarray(y.real)
    imag_norm = np.linalg.norm(y.imag)
    if imag_norm >= _IMAG_ERROR_RTOL * max(np.linalg.norm(real), 1e-300):
        raise SymmetryError(
            f"imaginary residue {imag_norm:.3e} exceeds tolerance; "
            "spectrum violates conjugate symmetry"
        )
    return real


def _mirror_slices(out: np.ndarray) -> None:
    """Fill slices beyond the non-redundant half by conjugate symmetry."""
    n3 = out.shape[2]
    half = half_slice_count(n3)
    for i in range(half, n3):
        out[:, :, i] = np.conj(out[:, :, n3 - i])


def map_fourier_slices(
    xf: FourierTensor3, f: Callable[[np.ndarray], np.ndarray]
) -> FourierTensor3:
    """Apply a conjugation-preserving matrix function to each frontal slice.

    f is evaluated only on slices 1..ceil((n3+1)/2); the remaining slices
    are mirrored, so f must satisfy f(conj(A)) = conj(f(A)).
    """
    n3 = xf.data.shape[2]
    half = half_slice_count(n3)
    mapped = [np.asarray(f(xf.data[:, :, i]), dtype=np.complex128) for i in range(half)]
    shape = mapped[0].shape
    if any(m.shape != shape for m in mapped):
        raise DimensionError("slice function returned inconsistent matrix extents")
    out = np.empty((shape[0], shape[1], n3), dtype=np.complex128)
    for i, m in enumerate(mapped):
        out[:, :, i] = m
    _mirror_slices(out)
    return FourierTensor3(out, symmetry_valid=True)


def tprod(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """T-product x * y via slice-wise products in the Fourier domain."""
    x = as_tensor(x)
    y = as_tensor(y)
    n1, n2, n3 = x.shape
    m2, n4, m3 = y.shape
    if n2 != m2 or n3 != m3:
        raise DimensionError(
            f"t-product needs (n1,n2,n3)*(n2,n4,n3); got {x.shape} * {y.shape}"
        )
    half = half_slice_count(n3)
    xf = np.fft.fft(x, axis=2)[:, :, :half]
    yf = np.fft.fft(y, axis=2)[:, :, :half]
    cf = np.matmul(np.moveaxis(xf, 2, 0), np.moveaxis(yf, 2, 0))
    out = np.empty((n1, n4, n3), dtype=np.complex128)
    out[:, :, :half] = np.moveaxis(cf, 0, 2)
    _mirror_slices(out)
    return idft_mode3(FourierTensor3(out))
