import math

import numpy as np
import pytest

from cvergo.energetics import ergotropy_report
from cvergo.exceptions import InsufficientLevelsError, InvalidParamsError
from cvergo.fock_oracle import (
    gaussian_reg_bell_mixture,
    global_passive_energy,
    passive_energy,
    pipeline_reg_bell_mixture,
    single_mode_levels,
    std_gap_bell_mixture,
    std_gap_fock_superposition,
    two_mode_levels,
)
from cvergo.states import fock_superposition_cm


def test_levels():
    assert single_mode_levels(2.0, 3) == [1.0, 3.0, 5.0]
    assert two_mode_levels(1.0, 2) == [1.0, 2.0, 2.0, 3.0, 3.0, 3.0]


def test_passive_energy_examples():
    assert passive_energy([1.0], [0.5]) == 0.5
    assert passive_energy([0.2, 0.8], [0.5, 1.5]) == pytest.approx(0.8 * 0.5 + 0.2 * 1.5)
    with pytest.raises(InsufficientLevelsError):
        passive_energy([0.5, 0.5], [0.5])
    with pytest.raises(InvalidParamsError):
        passive_energy([0.5, 0.6], [0.5, 1.5])
    with pytest.raises(InvalidParamsError):
        passive_energy([1.5, -0.5], [0.5, 1.5])
    with pytest.raises(ValueError):
        passive_energy([0.5, 0.5], [1.5, 0.5])


def test_passive_energy_below_any_permutation(rng):
    levels = single_mode_levels(1.0, 6)
    for _ in range(20):
        p = rng.dirichlet(np.ones(6))
        e = passive_energy(list(p), levels)
        for _ in range(10):
            assert e <= float(np.dot(rng.permutation(p), levels)) + 1e-12


def test_global_passive_pure():
    assert global_passive_energy([1.0], omega=2.0) == 2.0


@pytest.mark.parametrize("omega", [1.0, 2.5])
def test_fock_superposition_gaps(omega):
    for n in range(6):
        for m in range(6):
            want = 0.0 if n == m else omega
            assert std_gap_fock_superposition(n, m, omega) == pytest.approx(want, abs=1e-12)


def test_fock_superposition_gaussian_passive():
    for n in range(6):
        for m in range(6):
            rep = ergotropy_report(fock_superposition_cm(n, m).sigma)
            assert rep.gaussian_ergotropy_global <= 1e-9


def test_fock_superposition_errors():
    with pytest.raises(InvalidParamsError):
        std_gap_fock_superposition(-1, 2)


def test_bell_standard_gap():
    lams = np.linspace(0, 1, 101)
    gaps = [std_gap_bell_mixture(lam) for lam in lams]
    i = int(np.argmin(gaps))
    assert lams[i] == pytest.approx(0.5) and gaps[i] == pytest.approx(0.5)
    assert gaps[0] == pytest.approx(1.0) and gaps[-1] == pytest.approx(1.0)
    with pytest.raises(InvalidParamsError):
        std_gap_bell_mixture(1.2)


def test_bell_gaussian_reg_values():
    assert gaussian_reg_bell_mixture(0.5) == pytest.approx(0.0, abs=1e-12)
    s = math.sqrt(3.0)
    assert gaussian_reg_bell_mixture(1.0) == pytest.approx((2 - s) / (s - 1))
    assert gaussian_reg_bell_mixture(1.0) == pytest.approx(0.366, abs=1e-3)
    with pytest.raises(InvalidParamsError):
        gaussian_reg_bell_mixture(-0.1)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_bell_gaussian_reg_matches_pipeline(n):
    for lam in np.linspace(0, 1, 21):
        assert gaussian_reg_bell_mixture(lam, n) == pytest.approx(
            pipeline_reg_bell_mixture(lam, n), abs=1e-9
        )


def test_bell_reg_depends_on_n():
    # the n = 0 expression does not carry over to higher blocks
    assert pipeline_reg_bell_mixture(1.0, 1) != pytest.approx(gaussian_reg_bell_mixture(1.0, 0))


def test_standard_gaps_match_closed_forms():
    assert std_gap_fock_superposition(3, 7) == 1.0
    assert std_gap_fock_superposition(2, 2) == 0.0
    for lam in np.linspace(0, 1, 101):
        for omega in (1.0, 0.3):
            want = omega * (1.0 - min(lam, 1.0 - lam))
            assert std_gap_bell_mixture(lam, omega) == pytest.approx(want, abs=1e-12)
    assert std_gap_bell_mixture(0.3) == pytest.approx(0.7)


def test_two_level_global_passive():
    for lam in (0.1, 0.5, 0.8):
        assert global_passive_energy([lam, 1 - lam]) == pytest.approx(1.0 + min(lam, 1 - lam))


def test_bell_reg_symmetry_and_concordance():
    assert gaussian_reg_bell_mixture(0.25) == pytest.approx(gaussian_reg_bell_mixture(0.75))
    for lam in np.linspace(0, 1, 101):
        assert (gaussian_reg_bell_mixture(lam) > 1e-9) == (abs(lam - 0.5) > 1e-12)
