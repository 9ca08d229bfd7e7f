"""Encryption and decryption pipelines.

Each of the ``Sk`` rounds shuffles every colour plane with the
transpose-reshape permutation and, in ``"rotate"`` mode, relabels the planes
``(R, G, B) -> (G, B, R)``. The rounds are collapsed into one application of
the ``Sk``-th permutation power plus a rotation by ``Sk mod 3``.

This is a toy cipher. Its effective key space is at most
``p * order(P) * 3`` and a square image is only ever transposed or left in
place. Do not use it where confidentiality matters.
"""

from dataclasses import dataclass, replace

from ._validation import check_image
from .image import IDENTITY_ORDER, merge_channels, rotate_channels, split_channels
from .keying import derive_key
from .permute import (
    apply_permutation,
    build_transpose_reshape_permutation,
    invert_permutation,
    permutation_power,
)

CHANNEL_MODES = ("none", "rotate")


@dataclass(frozen=True)
class CipherConfig:
    """``channel_mode`` is ``"rotate"`` or ``"none"``; ``key_override`` replaces the derived ``Sk``."""

    channel_mode: str = "rotate"
    key_override: int | None = None

    def __post_init__(self):
        if self.channel_mode not in CHANNEL_MODES:
            raise ValueError(
                f"channel_mode must be one of {CHANNEL_MODES}, got {self.channel_mode!r}"
            )
        if self.key_override is not None and int(self.key_override) < 1:
            raise ValueError(f"key_override must be >= 1, got {self.key_override}")


def _key_for(img, cfg):
    key = derive_key(img)
    if cfg.key_override is not None:
        key = replace(key, sk=int(cfg.key_override))
    return key


def _rotation(cfg, sk):
    return sk % 3 if cfg.channel_mode == "rotate" else 0


def encrypt(img, cfg=None):
    """Encrypt ``img`` and return ``(ciphered, key_material)``."""
    cfg = cfg or CipherConfig()
    img = check_image(img)
    key = _key_for(img, cfg)
    c, p = img.shape[:2]
    shuffle = permutation_power(build_transpose_reshape_permutation(c, p), key.sk)
    planes = [apply_permutation(shuffle, ch) for ch in split_channels(img)]
    order = rotate_channels(IDENTITY_ORDER, _rotation(cfg, key.sk))
    return merge_channels(*planes, order=order), key


def decrypt_with_key(img, cfg=None):
    """Decrypt ``img`` and return ``(plain, key_material)``.

    The key is recomputed from the ciphered image, which works because it
    depends only on the pooled sample multiset and the dimensions.
    """
    cfg = cfg or CipherConfig()
    img = check_image(img)
    key = _key_for(img, cfg)
    c, p = img.shape[:2]
    unshuffle = invert_permutation(
        permutation_power(build_transpose_reshape_permutation(c, p), key.sk)
    )
    planes = [apply_permutation(unshuffle, ch) for ch in split_channels(img)]
    order = rotate_channels(IDENTITY_ORDER, (3 - _rotation(cfg, key.sk)) % 3)
    return merge_channels(*planes, order=order), key


def decrypt(img, cfg=None):
    """Invert :func:`encrypt`."""
    return decrypt_with_key(img, cfg)[0]
