"""Deterministic pixel-shuffling image cipher keyed by the image's own statistics."""

from ._validation import (
    DimensionMismatchError,
    SizeMismatchError,
    check_channel,
    check_image,
)
from .analysis import (
    AnalysisReport,
    UndefinedCorrelationError,
    adjacent_correlation,
    build_report,
    format_report,
    rgb_series,
)
from .cipher import CipherConfig, decrypt, decrypt_with_key, encrypt
from .estimator import PixelShuffleCipher
from .image import merge_channels, rotate_channels, split_channels
from .io import export_report, load_image, read_png, read_ppm, save_image, write_png, write_ppm
from .keying import KeyMaterial, PooledHistogram, derive_key, pooled_histogram, sample_mean, shannon_entropy
from .permute import (
    Permutation,
    apply_permutation,
    build_transpose_reshape_permutation,
    invert_permutation,
    naive_iterate,
    permutation_power,
)

__version__ = "0.1.0"
