import typing as th

import numpy as np
import pytest
from hypothesis import strategies as st

from ranklab.numeric import Scalar

scalars = st.builds(Scalar, st.integers(-1000, 1000), st.integers(1, 50))
positive_scalars = st.builds(Scalar, st.integers(1, 1000), st.integers(1, 50))
sequences = st.lists(scalars, max_size=24)
nonempty_sequences = st.lists(scalars, min_size=1, max_size=24)


def S(*values) -> th.List[Scalar]:
    """Shorthand: S(0, 5, '1/2') -> list of scalars."""
    out = []
    for value in values:
        if isinstance(value, str):
            p, _, q = value.partition('/')
            out.append(Scalar(int(p), int(q or 1)))
        else:
            out.append(Scalar(value))
    return out


def random_instance(rng: np.random.Generator, n: int) -> th.List[Scalar]:
    return [Scalar(int(p), int(q)) for p, q in zip(rng.integers(-1000, 1000, size=n, endpoint=True),
                                                    rng.integers(1, 50, size=n, endpoint=True))]


def random_threshold(rng: np.random.Generator) -> Scalar:
    return Scalar(int(rng.integers(1, 200, endpoint=True)), int(rng.integers(1, 50, endpoint=True)))


@pytest.fixture
def rng():
    return np.random.default_rng(313)
