"""Channel extraction, merging and cyclic channel interchange."""

import numpy as np

from ._validation import DimensionMismatchError, check_channel, check_image

LABELS = ("R", "G", "B")
IDENTITY_ORDER = LABELS


def check_order(order):
    order = tuple(order)
    if sorted(order) != sorted(LABELS):
        raise ValueError(f"channel order must contain R, G and B exactly once, got {order}")
    return order


def split_channels(img):
    """Return the ``(r, g, b)`` planes of ``img`` as separate 2-D arrays."""
    img = check_image(img)
    return tuple(np.ascontiguousarray(img[:, :, i]) for i in range(3))


def merge_channels(r, g, b, order=IDENTITY_ORDER):
    """Stack three planes into an image.

    Plane ``i`` of the result is the input labelled ``order[i]``, so with
    ``order=("G", "B", "R")`` the output pixel is ``(g, b, r)``.
    """
    order = check_order(order)
    planes = dict(zip(LABELS, (check_channel(r), check_channel(g), check_channel(b))))
    shapes = {p.shape for p in planes.values()}
    if len(shapes) != 1:
        raise DimensionMismatchError(
            f"channels must share one shape, got {sorted(shapes)}"
        )
    return np.stack([planes[label] for label in order], axis=2)


def rotate_channels(order, steps):
    """Cyclically rotate a channel order left by ``steps`` positions.

    >>> rotate_channels(("R", "G", "B"), 1)
    ('G', 'B', 'R')
    """
    order = check_order(order)
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    s = steps % 3
    return order[s:] + order[:s]
