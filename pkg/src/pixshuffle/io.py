"""Lossless raster I/O and report serialization.

Binary PPM (``P6``, maxval 255) is the interchange format. PNG is supported
through Pillow when installed, restricted to 8-bit RGB so that no decode
path silently converts samples.
"""

import csv
import io
import json
import struct
from pathlib import Path

import numpy as np

from ._validation import check_image

_WHITESPACE = b" \t\n\r\v\f"
_PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"


class ImageFormatError(ValueError):
    """Base class for raster decoding failures."""


class MalformedHeaderError(ImageFormatError):
    pass


class UnsupportedMaxvalError(ImageFormatError):
    pass


class TruncatedPayloadError(ImageFormatError):
    pass


class UnsupportedImageError(ImageFormatError):
    """Raised for images that cannot be represented as 8-bit RGB without conversion."""


def _next_token(data, pos, field):
    n = len(data)
    while pos < n:
        if data[pos] in _WHITESPACE:
            pos += 1
        elif data[pos] == ord("#"):
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
        pos += 1
    if start == pos:
        raise MalformedHeaderError(f"missing {field} in PPM header")
    token = bytes(data[start:pos])
    if not token.isdigit():
        raise MalformedHeaderError(f"{field} is not a decimal integer: {token!r}")
    return int(token), pos


def read_ppm(data):
    """Decode a binary PPM byte string into a ``(rows, cols, 3)`` uint8 array."""
    data = bytes(data)
    if data[:2] != b"P6":
        raise MalformedHeaderError(f"magic must be b'P6', got {data[:2]!r}")
    pos = 2
    if pos >= len(data) or data[pos] not in _WHITESPACE + b"#":
        raise MalformedHeaderError("magic must be followed by whitespace")
    width, pos = _next_token(data, pos, "width")
    height, pos = _next_token(data, pos, "height")
    maxval, pos = _next_token(data, pos, "maxval")
    if width < 1:
        raise MalformedHeaderError(f"width must be positive, got {width}")
    if height < 1:
        raise MalformedHeaderError(f"height must be positive, got {height}")
    if maxval != 255:
        raise UnsupportedMaxvalError(f"maxval must be 255, got {maxval}")
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise MalformedHeaderError("maxval must be followed by a single whitespace byte")
    pos += 1
    need = width * height * 3
    payload = data[pos : pos + need]
    if len(payload) < need:
        raise TruncatedPayloadError(
            f"payload has {len(payload)} bytes, header requires {need} ({width}x{height}x3)"
        )
    return np.frombuffer(payload, dtype=np.uint8).reshape(height, width, 3).copy()


def write_ppm(img):
    """Encode an image as canonical binary PPM bytes."""
    img = check_image(img)
    rows, cols = img.shape[:2]
    return f"P6\n{cols} {rows}\n255\n".encode("ascii") + img.tobytes()


def _png_header(data):
    if data[:8] != _PNG_SIGNATURE or data[12:16] != b"IHDR":
        raise MalformedHeaderError("not a PNG file")
    width, height, depth, colour = struct.unpack(">IIBB", data[16:26])
    return width, height, depth, colour


def read_png(data):
    """Decode an 8-bit RGB PNG. Alpha, palette, grayscale and 16-bit inputs are rejected."""
    data = bytes(data)
    _, _, depth, colour = _png_header(data)
    if depth != 8 or colour != 2:
        raise UnsupportedImageError(
            f"only 8-bit RGB PNG is supported (bit depth {depth}, colour type {colour})"
        )
    from PIL import Image

    with Image.open(io.BytesIO(data)) as im:
        if im.mode != "RGB":
            raise UnsupportedImageError(f"PNG decoded as mode {im.mode}, expected RGB")
        return np.array(im, dtype=np.uint8)


def write_png(img):
    from PIL import Image

    buf = io.BytesIO()
    Image.fromarray(check_image(img), mode="RGB").save(buf, format="PNG")
    return buf.getvalue()


def _codec_for(path):
    if Path(path).suffix.lower() == ".png":
        return read_png, write_png
    return read_ppm, write_ppm


def load_image(path):
    """Read a PPM or (by ``.png`` suffix) PNG file."""
    reader, _ = _codec_for(path)
    return reader(Path(path).read_bytes())


def save_image(img, path):
    _, writer = _codec_for(path)
    Path(path).write_bytes(writer(img))


def export_report(report, format="structured"):
    """Serialize an analysis report.

    ``"structured"`` is JSON with the field names of ``AnalysisReport.as_dict``;
    ``"csv"`` holds the plain image's RGB series as ``index,R,G,B`` rows.
    """
    if format == "structured":
        return (json.dumps(report.as_dict(), indent=2, sort_keys=True) + "\n").encode()
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "R", "G", "B"])
        s = report.plain.series
        for i, row in enumerate(zip(s["R"].tolist(), s["G"].tolist(), s["B"].tolist())):
            writer.writerow([i, *row])
        return buf.getvalue().encode()
    raise ValueError(f"format must be 'structured' or 'csv', got {format!r}")
