"""scikit-learn compatible wrapper around :func:`encrypt` / :func:`decrypt`."""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from ._validation import check_image
from .cipher import CipherConfig, decrypt, encrypt
from .keying import derive_key


def check_images(X):
    """Normalise ``X`` to a list of validated images.

    ``X`` may be one ``(rows, cols, 3)`` image, a ``(n, rows, cols, 3)``
    stack, or a sequence of images of differing sizes. Returns the list and
    a callable restoring the input's container shape.
    """
    if isinstance(X, np.ndarray) and X.ndim == 3:
        return [check_image(X)], lambda out: out[0]
    if isinstance(X, np.ndarray) and X.ndim == 4:
        return [check_image(x) for x in X], np.stack
    if isinstance(X, (list, tuple)):
        return [check_image(x) for x in X], list
    raise ValueError(
        "X must be an image array (rows, cols, 3), a stack (n, rows, cols, 3) "
        "or a list of images"
    )


class PixelShuffleCipher(TransformerMixin, BaseEstimator):
    """Image-keyed pixel-shuffling cipher.

    Parameters
    ----------
    channel_mode : {"rotate", "none"}, default="rotate"
        Whether each round also relabels the colour planes ``(R, G, B) -> (G, B, R)``.
    key : int or None, default=None
        Fixed iteration count. When ``None`` the count is derived from each
        image, and :meth:`inverse_transform` re-derives it from the ciphered
        image.

    Attributes
    ----------
    keys_ : list of KeyMaterial
        Key material of the images passed to :meth:`fit`. Fitting is
        optional; :meth:`transform` derives keys per image.
    """

    def __init__(self, channel_mode="rotate", key=None):
        self.channel_mode = channel_mode
        self.key = key

    def _config(self):
        return CipherConfig(channel_mode=self.channel_mode, key_override=self.key)

    def fit(self, X, y=None):
        self._config()
        images, _ = check_images(X)
        self.keys_ = [derive_key(im) for im in images]
        return self

    def transform(self, X):
        cfg = self._config()
        images, restore = check_images(X)
        return restore([encrypt(im, cfg)[0] for im in images])

    def inverse_transform(self, X):
        cfg = self._config()
        images, restore = check_images(X)
        return restore([decrypt(im, cfg) for im in images])

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.requires_fit = False
        return tags
