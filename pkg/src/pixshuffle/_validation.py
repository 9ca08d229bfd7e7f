"""Input validation helpers shared by the functional API and the estimator."""

import numpy as np

__all__ = [
    "DimensionMismatchError",
    "SizeMismatchError",
    "check_image",
    "check_channel",
]


class DimensionMismatchError(ValueError):
    """Raised when images or channels that must share a shape do not."""


class SizeMismatchError(ValueError):
    """Raised when a permutation is applied to a channel of the wrong size."""


def _as_uint8(values, what):
    arr = np.asarray(values)
    if arr.dtype == np.uint8:
        return np.ascontiguousarray(arr)
    if arr.dtype.kind not in "iub":
        raise TypeError(f"{what} must hold integer samples, got dtype {arr.dtype}")
    if arr.size and (arr.min() < 0 or arr.max() > 255):
        raise ValueError(f"{what} samples must lie in [0, 255]")
    return np.ascontiguousarray(arr, dtype=np.uint8)


def check_image(img):
    """Validate an RGB image and return it as a C-contiguous ``uint8`` array.

    Accepts anything array-like with shape ``(rows, cols, 3)`` and integer
    samples in ``[0, 255]``. Grayscale and alpha images are rejected rather
    than converted.
    """
    arr = np.asarray(img)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError(
            f"expected an image of shape (rows, cols, 3), got shape {arr.shape}"
        )
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"image must have at least one pixel, got shape {arr.shape}")
    return _as_uint8(arr, "image")


def check_channel(ch):
    """Validate a single colour plane of shape ``(rows, cols)``."""
    arr = np.asarray(ch)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"expected a channel of shape (rows, cols), got {arr.shape}")
    return _as_uint8(arr, "channel")
