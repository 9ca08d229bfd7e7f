import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

sys.path.insert(0, str(Path(__file__).parent))


def images(max_side=16):
    shapes = st.tuples(
        st.integers(1, max_side), st.integers(1, max_side), st.just(3)
    )
    return shapes.flatmap(lambda s: arrays(np.uint8, s))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def worked_image():
    """2x3 image whose red plane is [[1,2,3],[4,5,6]]; green/blue offset by 10/20."""
    r = np.arange(1, 7, dtype=np.uint8).reshape(2, 3)
    return np.dstack([r, r + 10, r + 20])


@pytest.fixture
def constant_image():
    return np.full((2, 3, 3), 100, dtype=np.uint8)


@pytest.fixture
def balanced_image():
    """2x2 image with six samples 0 and six samples 255."""
    img = np.zeros((2, 2, 3), dtype=np.uint8)
    img[0] = 255
    return img


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    failed = call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception)
    entry = _criteria.setdefault(number, [title, True])
    if failed:
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")
