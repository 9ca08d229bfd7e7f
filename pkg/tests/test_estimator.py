import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import make_pipeline

from pixshuffle import CipherConfig, PixelShuffleCipher, derive_key, encrypt


def test_params_round_trip():
    est = PixelShuffleCipher(channel_mode="none", key=5)
    assert est.get_params() == {"channel_mode": "none", "key": 5}
    est.set_params(key=None)
    assert clone(est).get_params() == {"channel_mode": "none", "key": None}


def test_single_image(worked_image):
    est = PixelShuffleCipher().fit(worked_image)
    assert est.keys_ == [derive_key(worked_image)]
    ct = est.transform(worked_image)
    assert np.array_equal(ct, encrypt(worked_image)[0])
    assert np.array_equal(est.inverse_transform(ct), worked_image)


def test_stack_and_list(rng):
    stack = rng.integers(0, 256, size=(4, 6, 5, 3), dtype=np.uint8)
    est = PixelShuffleCipher(channel_mode="none")
    ct = est.fit_transform(stack)
    assert ct.shape == stack.shape
    assert np.array_equal(est.inverse_transform(ct), stack)

    mixed = [rng.integers(0, 256, size=s, dtype=np.uint8) for s in [(3, 4, 3), (7, 2, 3)]]
    out = est.transform(mixed)
    assert isinstance(out, list)
    assert all(np.array_equal(a, b) for a, b in zip(est.inverse_transform(out), mixed))


def test_key_parameter(worked_image):
    est = PixelShuffleCipher(key=4)
    expected, _ = encrypt(worked_image, CipherConfig("rotate", key_override=4))
    assert np.array_equal(est.transform(worked_image), expected)


def test_invalid_params(worked_image):
    with pytest.raises(ValueError):
        PixelShuffleCipher(channel_mode="bogus").fit(worked_image)
    with pytest.raises(ValueError):
        PixelShuffleCipher().transform(np.zeros((2, 2), np.uint8))


def test_in_pipeline(worked_image):
    pipe = make_pipeline(PixelShuffleCipher(key=1), PixelShuffleCipher(key=1))
    twice = pipe.fit_transform(worked_image)
    expected, _ = encrypt(worked_image, CipherConfig(key_override=2))
    assert np.array_equal(twice, expected)
