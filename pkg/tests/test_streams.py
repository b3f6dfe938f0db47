import numpy as np
import pytest

from mlstable.streams import stream


def test_same_seed_same_label_reproduces():
    a = stream(7, "suite:check").random(16)
    b = stream(7, "suite:check").random(16)
    assert np.array_equal(a, b)


def test_labels_decorrelate():
    a = stream(7, "suite:check-a").random(16)
    b = stream(7, "suite:check-b").random(16)
    assert not np.array_equal(a, b)


def test_seeds_decorrelate():
    a = stream(1, "suite:check").random(16)
    b = stream(2, "suite:check").random(16)
    assert not np.array_equal(a, b)


def test_empty_label_rejected():
    with pytest.raises(ValueError):
        stream(0, "")
