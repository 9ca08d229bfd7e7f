import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import images
from oracles import brute_key, literal_encrypt
from pixshuffle import CipherConfig, decrypt, decrypt_with_key, derive_key, encrypt

modes = st.sampled_from(["none", "rotate"])


def test_single_pixel_rotate():
    img = np.array([[[10, 20, 30]]], np.uint8)
    out, key = encrypt(img, CipherConfig("rotate"))
    assert key.sk == 1
    assert out[0, 0].tolist() == [20, 30, 10]
    assert decrypt(out, CipherConfig("rotate"))[0, 0].tolist() == [10, 20, 30]


def test_constant_image_is_fixed_point(constant_image):
    out, key = encrypt(constant_image, CipherConfig("none"))
    assert key.sk == 1
    assert np.array_equal(out, constant_image)


def test_worked_example_key_one(worked_image):
    out, key = encrypt(worked_image, CipherConfig("none", key_override=1))
    assert key.sk == 1
    assert out[:, :, 0].tolist() == [[1, 3, 5], [2, 4, 6]]
    assert out[:, :, 1].tolist() == [[11, 13, 15], [12, 14, 16]]
    assert out[:, :, 2].tolist() == [[21, 23, 25], [22, 24, 26]]


def test_worked_example_derived_key_rotate(worked_image):
    # derived Sk = 1: one shuffle, then planes relabelled (g, b, r)
    out, key = encrypt(worked_image)
    assert key.sk == 1
    assert out[:, :, 0].tolist() == [[11, 13, 15], [12, 14, 16]]
    assert out[:, :, 2].tolist() == [[1, 3, 5], [2, 4, 6]]


def test_config_validation():
    with pytest.raises(ValueError):
        CipherConfig("swap")
    with pytest.raises(ValueError):
        CipherConfig(key_override=0)


@settings(max_examples=200)
@given(images(), modes)
def test_round_trip(img, mode):
    cfg = CipherConfig(mode)
    ct, key = encrypt(img, cfg)
    assert ct.shape == img.shape
    assert np.array_equal(decrypt(ct, cfg), img)
    assert derive_key(ct) == derive_key(img) == key


@given(images(max_side=8), modes, st.integers(1, 20))
def test_matches_literal_loop(img, mode, sk):
    ct, _ = encrypt(img, CipherConfig(mode, key_override=sk))
    assert np.array_equal(ct, literal_encrypt(img, sk, mode == "rotate"))


@given(images(max_side=8), modes)
def test_matches_literal_loop_with_derived_key(img, mode):
    ct, key = encrypt(img, CipherConfig(mode))
    assert key.sk == brute_key(img)
    assert np.array_equal(ct, literal_encrypt(img, key.sk, mode == "rotate"))


@given(images(), modes)
def test_multiset_preservation(img, mode):
    ct, _ = encrypt(img, CipherConfig(mode))
    assert np.array_equal(np.sort(ct, axis=None), np.sort(img, axis=None))
    assert int(ct.astype(np.int64).sum()) == int(img.astype(np.int64).sum())
    if mode == "none":
        for i in range(3):
            assert np.array_equal(np.sort(ct[:, :, i], axis=None), np.sort(img[:, :, i], axis=None))


def test_key_override_round_trip(rng):
    img = rng.integers(0, 256, size=(5, 9, 3), dtype=np.uint8)
    cfg = CipherConfig("rotate", key_override=1000)
    ct, key = encrypt(img, cfg)
    assert key.sk == 1000
    plain, used = decrypt_with_key(ct, cfg)
    assert used.sk == 1000
    assert np.array_equal(plain, img)


def test_tampered_ciphertext_does_not_decrypt():
    img = np.arange(4 * 7 * 3, dtype=np.uint8).reshape(4, 7, 3)
    cfg = CipherConfig("rotate")
    ct, key = encrypt(img, cfg)
    tampered = ct.copy()
    tampered[0, 0, 0] ^= 1
    plain, used = decrypt_with_key(tampered, cfg)
    assert used.sk != key.sk or not np.array_equal(plain, img)
    assert not np.array_equal(plain, img)
