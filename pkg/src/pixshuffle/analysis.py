"""Measurements for plain/ciphered image pairs.

Correlation is reported but never treated as an invariant: a permutation
cipher need not lower it (a square image is merely transposed).
"""

from dataclasses import dataclass, field

import numpy as np

from ._validation import DimensionMismatchError, check_image
from .image import LABELS
from .keying import KeyMaterial, derive_key, pooled_histogram

DIRECTIONS = ("horizontal", "vertical", "diagonal")
DEFAULT_SERIES_LENGTH = 10_000
VERDICTS = ("dimensions", "pooled_histogram", "entropy", "mean", "sk")


class UndefinedCorrelationError(ValueError):
    """Raised when a correlation coefficient has no defined value."""


def rgb_series(img, n=DEFAULT_SERIES_LENGTH):
    """First ``min(n, rows*cols)`` pixels in row-major order, split per channel."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    flat = check_image(img).reshape(-1, 3)[:n]
    return tuple(flat[:, i].copy() for i in range(3))


def _adjacent_pairs(plane, direction):
    if direction == "horizontal":
        return plane[:, :-1], plane[:, 1:]
    if direction == "vertical":
        return plane[:-1, :], plane[1:, :]
    if direction == "diagonal":
        return plane[:-1, :-1], plane[1:, 1:]
    raise ValueError(f"direction must be one of {DIRECTIONS}, got {direction!r}")


def pearson(x, y):
    x = np.asarray(x, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()
    if x.size != y.size:
        raise ValueError("series must have equal length")
    if x.size < 2:
        raise UndefinedCorrelationError("need at least two pairs")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        raise UndefinedCorrelationError("zero variance in one of the series")
    r = float(dx @ dy) / np.sqrt(sxx * syy)
    return float(np.clip(r, -1.0, 1.0))


def adjacent_correlation(img, direction, channel):
    """Pearson correlation of all in-bounds neighbour pairs in one channel."""
    img = check_image(img)
    if channel not in LABELS:
        raise ValueError(f"channel must be one of {LABELS}, got {channel!r}")
    a, b = _adjacent_pairs(img[:, :, LABELS.index(channel)], direction)
    return pearson(a, b)


@dataclass
class ImageReport:
    key: KeyMaterial
    pooled_histogram: np.ndarray
    channel_histograms: dict
    series: dict
    correlations: dict

    @property
    def sample_count(self):
        return self.key.rows * self.key.cols * 3

    def as_dict(self):
        return {
            "rows": self.key.rows,
            "cols": self.key.cols,
            "key": self.key.as_dict(),
            "histograms": {
                "pooled": self.pooled_histogram.tolist(),
                **{ch: h.tolist() for ch, h in self.channel_histograms.items()},
            },
            "series": {ch: s.tolist() for ch, s in self.series.items()},
            "correlations": self.correlations,
        }


@dataclass
class AnalysisReport:
    plain: ImageReport
    ciphered: ImageReport | None = None
    verdicts: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(self.verdicts.values())

    def as_dict(self):
        return {
            "plain": self.plain.as_dict(),
            "ciphered": self.ciphered.as_dict() if self.ciphered else None,
            "verdicts": dict(self.verdicts),
        }


def image_report(img, n=DEFAULT_SERIES_LENGTH):
    img = check_image(img)
    correlations = {}
    for ch in LABELS:
        correlations[ch] = {}
        for d in DIRECTIONS:
            try:
                correlations[ch][d] = adjacent_correlation(img, d, ch)
            except UndefinedCorrelationError:
                correlations[ch][d] = None
    return ImageReport(
        key=derive_key(img),
        pooled_histogram=pooled_histogram(img).bins,
        channel_histograms={
            ch: np.bincount(img[:, :, i].ravel(), minlength=256)
            for i, ch in enumerate(LABELS)
        },
        series=dict(zip(LABELS, rgb_series(img, n))),
        correlations=correlations,
    )


def build_report(plain, ciphered=None, n=DEFAULT_SERIES_LENGTH):
    """Analyse ``plain`` and, when given, check the cipher invariants against ``ciphered``."""
    plain = check_image(plain)
    if ciphered is None:
        return AnalysisReport(plain=image_report(plain, n))
    ciphered = check_image(ciphered)
    if ciphered.shape != plain.shape:
        raise DimensionMismatchError(
            f"cannot pair a {plain.shape[0]}x{plain.shape[1]} image with a "
            f"{ciphered.shape[0]}x{ciphered.shape[1]} image"
        )
    a, b = image_report(plain, n), image_report(ciphered, n)
    verdicts = {
        "dimensions": plain.shape == ciphered.shape,
        "pooled_histogram": bool(np.array_equal(a.pooled_histogram, b.pooled_histogram)),
        "entropy": a.key.entropy == b.key.entropy,
        "mean": a.key.mean == b.key.mean,
        "sk": a.key.sk == b.key.sk,
    }
    return AnalysisReport(plain=a, ciphered=b, verdicts=verdicts)


def _fmt_corr(value):
    return "undefined" if value is None else f"{value:.4f}"


def format_report(report):
    """Human-readable rendering of a report."""
    lines = []
    for name, rep in (("plain", report.plain), ("ciphered", report.ciphered)):
        if rep is None:
            continue
        lines.append(f"[{name}] {rep.key}")
        for ch in LABELS:
            corr = rep.correlations[ch]
            lines.append(
                f"  {ch}: " + " ".join(f"{d}={_fmt_corr(corr[d])}" for d in DIRECTIONS)
            )
        lines.append(f"  series length: {len(rep.series['R'])}")
    for name, ok in report.verdicts.items():
        lines.append(f"verdict {name}: {'PASS' if ok else 'FAIL'}")
    return "\n".join(lines) + "\n"
