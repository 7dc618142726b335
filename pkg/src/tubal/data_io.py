"""Image and binary tensor file I/O.

Images are held as height x width x 3 tensors on the 0..255 float scale
(never normalized to [0, 1]; the PSNR constant assumes 255).  The binary
tensor format is: magic "T3F1", three little-endian uint64 extents, then
n1*n2*n3 float64 values in slice-major, row-major order.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .core import as_tensor
from .errors import FormatError

__all__ = ["load_image", "save_image", "write_tensor", "read_tensor"]

_MAGIC = b"T3F1"
_HEADER = struct.Struct("<3Q")
# refuse extents whose product cannot be a sane payload
_MAX_ELEMENTS = 2**40


def load_image(path: str | Path) -> np.ndarray:
    """Load a raster image as an h x w x 3 tensor; grayscale is promoted."""
    try:
        with Image.open(path) as img:
            rgb = img.convert("RGB")
            arr = np.asarray(rgb, dtype=np.float64)
    except (UnidentifiedImageError, OSError) as exc:
        raise IOError(f"cannot read image {path}: {exc}") from exc
    return arr


def save_image(x: np.ndarray, path: str | Path) -> None:
    """Clamp to [0, 255], round, and save (format from the file suffix)."""
    x = as_tensor(x)
    if x.shape[2] != 3:
        raise FormatError(f"expected an h x w x 3 image tensor, got {x.shape}")
    pixels = np.clip(np.rint(x), 0, 255).astype(np.uint8)
    try:
        Image.fromarray(pixels, mode="RGB").save(path)
    except (ValueError, OSError) as exc:
        raise IOError(f"cannot write image {path}: {exc}") from exc


def write_tensor(x: np.ndarray, path: str | Path) -> None:
    """Write the binary tensor format; round-trips are bit-exact."""
    x = as_tensor(x)
    n1, n2, n3 = x.shape
    payload = np.ascontiguousarray(np.moveaxis(x, 2, 0), dtype="<f8")
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(_HEADER.pack(n1, n2, n3))
        fh.write(payload.tobytes())


def read_tensor(path: str | Path) -> np.ndarray:
    """Read the binary tensor format written by write_tensor."""
    with open(path, "rb") as fh:
        blob = fh.read()
    if blob[:4] != _MAGIC:
        raise FormatError(f"{path}: bad magic {blob[:4]!r}")
    if len(blob) < 4 + _HEADER.size:
        raise FormatError(f"{path}: truncated header")
    n1, n2, n3 = _HEADER.unpack_from(blob, 4)
    if min(n1, n2, n3) < 1 or n1 * n2 * n3 > _MAX_ELEMENTS:
        raise FormatError(f"{path}: implausible extents ({n1}, {n2}, {n3})")
    expected = 4 + _HEADER.size + 8 * n1 * n2 * n3
    if len(blob) != expected:
        raise FormatError(
            f"{path}: payload length {len(blob)} != expected {expected}"
        )
    flat = np.frombuffer(blob, dtype="<f8", offset=4 + _HEADER.size)
    return np.moveaxis(flat.reshape(n3, n1, n2), 0, 2).copy()
