"""Image statistics and the image-derived iteration key.

Every quantity here depends only on the image dimensions and on the pooled
multiset of samples across all three channels. Shuffling pixels or swapping
colour planes therefore leaves the key unchanged, which is what lets the
receiver recompute it from the ciphered image.
"""

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from ._validation import check_image

_SCALE = 10_000  # 4 decimal places


@dataclass(frozen=True)
class PooledHistogram:
    """Occurrence counts of each 8-bit value over all samples of an image."""

    bins: np.ndarray
    total: int

    def __post_init__(self):
        if self.bins.shape != (256,):
            raise ValueError("histogram must have exactly 256 bins")
        if (self.bins < 0).any() or int(self.bins.sum()) != self.total:
            raise ValueError("histogram bins must be non-negative and sum to total")

    def __eq__(self, other):
        if not isinstance(other, PooledHistogram):
            return NotImplemented
        return self.total == other.total and np.array_equal(self.bins, other.bins)

    __hash__ = None


@dataclass(frozen=True)
class KeyMaterial:
    """Dimensions, quantized statistics and the iteration count ``sk``."""

    rows: int
    cols: int
    entropy: float
    mean: float
    sk: int

    def __post_init__(self):
        if not 0.0 <= self.entropy <= 8.0:
            raise ValueError(f"entropy out of range: {self.entropy}")
        if not 0.0 <= self.mean <= 255.0:
            raise ValueError(f"mean out of range: {self.mean}")
        if self.sk < 1:
            raise ValueError(f"iteration count must be positive, got {self.sk}")

    def as_dict(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entropy": self.entropy,
            "mean": self.mean,
            "sk": self.sk,
        }

    def __str__(self):
        return (
            f"c={self.rows} p={self.cols} He={self.entropy:.4f} "
            f"mean={self.mean:.4f} Sk={self.sk}"
        )


def _quantize_units(x):
    """Round a non-negative float to 4 decimals, half away from zero, in 1e-4 units."""
    q = Decimal(x).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP)
    return int(q * _SCALE)


def pooled_histogram(img):
    img = check_image(img)
    bins = np.bincount(img.ravel(), minlength=256).astype(np.int64)
    return PooledHistogram(bins=bins, total=img.size)


def _entropy_units(h):
    if h.total <= 0:
        raise ValueError("entropy of an empty histogram is undefined")
    total = h.total
    terms = []
    for count in h.bins.tolist():
        if count:
            prob = count / total
            terms.append(-prob * math.log2(prob))
    return _quantize_units(max(math.fsum(terms), 0.0))


def shannon_entropy(h):
    """Shannon entropy of a pooled histogram in bits, quantized to 4 decimals."""
    return _entropy_units(h) / _SCALE


def _mean_units(img):
    n = img.size
    total = int(img.sum(dtype=np.int64))
    # round-half-up of total/n in 1e-4 units, in exact integer arithmetic
    return (2 * _SCALE * total + n) // (2 * n)


def sample_mean(img):
    """Mean over every sample of every channel, quantized to 4 decimals."""
    return _mean_units(check_image(img)) / _SCALE


def derive_key(img):
    """Derive :class:`KeyMaterial` from an image.

    ``Sk = floor(c*p + 1000*He + mean) mod p``, with a zero remainder mapped
    to ``p`` so the cipher never degenerates to zero iterations. The sum is
    formed in exact 1e-4 fixed point from the quantized statistics.
    """
    img = check_image(img)
    rows, cols = img.shape[:2]
    he = _entropy_units(pooled_histogram(img))
    mean = _mean_units(img)
    raw_units = rows * cols * _SCALE + he * 1000 + mean
    sk = (raw_units // _SCALE) % cols
    if sk == 0:
        sk = cols
    return KeyMaterial(
        rows=rows, cols=cols, entropy=he / _SCALE, mean=mean / _SCALE, sk=sk
    )
