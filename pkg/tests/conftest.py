import numpy as np
import pytest

from legseq.constructions import BinarySequence


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_sequence(rng, n):
    vals = tuple(int(v) for v in rng.choice((-1, 1), size=n))
    return BinarySequence(vals)
