import math

import numpy as np
import pytest

from cvergo.phase_space import beam_splitter, local_squeezer, phase_rotation
from cvergo.states import compose_bloch_messiah, random_params


def random_symplectic(rng):
    """Product of random passive and squeezing layers."""
    s = np.eye(4)
    for _ in range(3):
        s = phase_rotation(*rng.uniform(0, 2 * math.pi, 2)) @ s
        s = beam_splitter(rng.uniform(0, math.pi)) @ s
        s = local_squeezer(*np.exp(rng.uniform(-1, 1, 2))) @ s
    return s


def random_gaussian(rng, index, k_max=4.0, pure=False):
    """Bloch-Messiah state with random k in (1, k_max] and |gamma| <= k - 1."""
    if pure:
        k, g = 1.0, 0.0
    else:
        k = rng.uniform(1.0, k_max)
        g = rng.uniform(-(k - 1.0), k - 1.0)
    p = random_params(k, g, seed=int(rng.integers(2**31)), index=index)
    return p, compose_bloch_messiah(p)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
