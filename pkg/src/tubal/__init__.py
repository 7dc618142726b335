"""Third-order tensor algebra under the t-product.

FFT-domain t-product calculus (T-QR, T-SVD, pseudoinverse), randomized
truncated T-SVD via power iteration or a block Krylov basis, and
low-tubal-rank image completion, with a block-circulant oracle for
verification.
"""

from .completion import CompletionConfig, Mask, apply_mask, complete, generate_mask
from .core import (
    concat_lateral,
    fro_norm,
    frontal_slice,
    identity_tensor,
    make_tensor,
    spectral_norm,
    t_transpose,
)
from .factor import TqrFactors, TsvdFactors, pinv, tqr, truncate_tsvd, tsvd, tubal_rank
from .fourier import FourierTensor3, dft_mode3, idft_mode3, map_fourier_slices, tprod
from .metrics import RunReport, psnr, relative_error, synthetic_case
from .sketch import (
    KrylovBasis,
    SketchParams,
    build_krylov_basis,
    gaussian_tensor,
    projector_residual_bound_check,
    randomized_tsvd_block_krylov,
    randomized_tsvd_power,
)

__version__ = "0.1.0"

__all__ = [
    "CompletionConfig",
    "FourierTensor3",
    "KrylovBasis",
    "Mask",
    "RunReport",
    "SketchParams",
    "TqrFactors",
    "TsvdFactors",
    "apply_mask",
    "build_krylov_basis",
    "complete",
    "concat_lateral",
    "dft_mode3",
    "fro_norm",
    "frontal_slice",
    "gaussian_tensor",
    "generate_mask",
    "idft_mode3",
    "identity_tensor",
    "make_tensor",
    "map_fourier_slices",
    "pinv",
    "projector_residual_bound_check",
    "psnr",
    "randomized_tsvd_block_krylov",
    "randomized_tsvd_power",
    "relative_error",
    "spectral_norm",
    "synthetic_case",
    "t_transpose",
    "tprod",
    "tqr",
    "truncate_tsvd",
    "tsvd",
    "tubal_rank",
]
