import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cvergo.energetics import (
    ModePair,
    ergotropy_report,
    mean_energy,
    passive_energies,
    reg_closed_form,
    reg_from_energies,
    reg_standard_form_vec,
    tms_gap,
)
from cvergo.exceptions import DegeneratePurityError, InvalidParamsError, NonPhysicalError
from cvergo.phase_space import BlochMessiahParams, StandardFormParams, standard_form
from cvergo.states import compose_bloch_messiah, tms

from conftest import random_gaussian, random_symplectic


def test_mode_pair_ordering():
    assert ModePair(1.0, 3.0).alpha == 3.0
    assert ModePair.from_ratio(2.5, omega=2.0) == ModePair(2.0, 5.0)
    with pytest.raises(InvalidParamsError):
        ModePair(2.0, 1.0)
    with pytest.raises(InvalidParamsError):
        ModePair(0.0, 1.0)


def test_mean_energy_examples():
    assert mean_energy(np.eye(4), ModePair(0.7, 3.0)) == 0.0
    # each mode contributes omega (k - 1) / 2
    for k in (1.0, 2.0, 3.5):
        assert mean_energy(k * np.eye(4)) == pytest.approx(k - 1.0)
    r, w = 0.8, 1.7
    assert mean_energy(tms(1.0, r), ModePair(w, w)) == pytest.approx(2 * w * math.sinh(r) ** 2)


def test_passive_energies_examples():
    assert passive_energies(np.eye(4)) == pytest.approx((0.0, 0.0))
    s = StandardFormParams(3.0, 2.0, 0.0, 0.0).matrix()
    assert passive_energies(s) == pytest.approx((1.5, 1.5))


def test_passive_energies_rejects_unphysical():
    with pytest.raises(NonPhysicalError):
        passive_energies(0.5 * np.eye(4))


def test_report_vacuum():
    rep = ergotropy_report(np.eye(4))
    assert rep.gap == 0.0 and rep.reg == 0.0
    assert not rep.degenerate_purity


def test_report_pure_tms():
    r, modes = 0.6, ModePair(1.0, 2.0)
    rep = ergotropy_report(tms(1.0, r), modes)
    a = math.cosh(2 * r)
    assert rep.gap == pytest.approx((a - 1.0) * 3.0 / 2.0, rel=1e-12)
    assert rep.reg is None and rep.degenerate_purity


def test_report_tms_matches_closed_form():
    rep = ergotropy_report(tms(2.0, 1.0))
    assert rep.gap == pytest.approx(tms_gap(2.0, 1.0), rel=1e-12)
    assert rep.gap == pytest.approx(5.524391382167261, rel=1e-12)


def test_report_identities(rng):
    modes = ModePair(1.0, 2.3)
    for i in range(50):
        _, s = random_gaussian(rng, i)
        rep = ergotropy_report(s, modes)
        assert rep.gap == pytest.approx(
            rep.gaussian_ergotropy_global - rep.gaussian_ergotropy_local, abs=1e-9
        )
        assert rep.gap >= -1e-9
        assert rep.e_global_passive <= rep.e_local_passive + 1e-9 <= rep.mean_energy + 2e-9


def test_gap_invariant_under_local_symplectics(rng):
    from cvergo.phase_space import apply_symplectic, local_squeezer, phase_rotation

    for i in range(30):
        _, s = random_gaussian(rng, i)
        local = local_squeezer(*np.exp(rng.uniform(-1, 1, 2))) @ phase_rotation(*rng.uniform(0, 6, 2))
        assert ergotropy_report(apply_symplectic(local, s)).gap == pytest.approx(
            ergotropy_report(s).gap, rel=1e-8, abs=1e-10
        )


def test_global_passive_invariant_under_all_symplectics(rng):
    for i in range(30):
        _, s = random_gaussian(rng, i)
        from cvergo.phase_space import apply_symplectic

        t = apply_symplectic(random_symplectic(rng), s)
        assert passive_energies(t)[1] == pytest.approx(passive_energies(s)[1], rel=1e-8, abs=1e-10)


def test_frequency_pairing_flag():
    # hotter mode on the expensive oscillator
    s = StandardFormParams(1.5, 3.0, 0.0, 0.0).matrix()
    assert ergotropy_report(s, ModePair(1.0, 2.0)).frequency_pairing_flag
    assert not ergotropy_report(s, ModePair(1.0, 1.0)).frequency_pairing_flag


def test_reg_from_energies_cases():
    assert reg_from_energies(0.0, 0.0) == (0.0, False)
    assert reg_from_energies(2.0, 0.0) == (None, True)
    assert reg_from_energies(3.0, 2.0) == (0.5, False)


def test_reg_closed_form_theta_zero():
    p = BlochMessiahParams(k=2.5, gamma=0.5, z_a=0.3, z_b=4.0, theta=0.0)
    assert reg_closed_form(p, alpha=3.0) == pytest.approx(0.0, abs=1e-12)


def test_reg_closed_form_dual_path_example():
    p = BlochMessiahParams(k=2.5, gamma=0.5, z_a=0.3, z_b=1.0, theta=math.pi / 4)
    modes = ModePair.from_ratio(10.0)
    want = ergotropy_report(compose_bloch_messiah(p), modes).reg
    assert reg_closed_form(p, alpha=10.0) == pytest.approx(want, rel=1e-9)


def test_reg_closed_form_negative_gamma():
    p = BlochMessiahParams(k=3.0, gamma=-1.2, z_a=0.4, z_b=2.0, theta=0.9, phi_a=1.0)
    want = ergotropy_report(compose_bloch_messiah(p), ModePair.from_ratio(4.0)).reg
    assert reg_closed_form(p, 4.0) == pytest.approx(want, rel=1e-9)


def test_reg_closed_form_errors():
    with pytest.raises(DegeneratePurityError):
        reg_closed_form(BlochMessiahParams(k=1.0, theta=0.5, z_a=0.5))
    with pytest.raises(InvalidParamsError):
        reg_closed_form(BlochMessiahParams(k=2.0), alpha=0.5)


def test_tms_gap_examples():
    assert tms_gap(3.0, 0.0) == 0.0
    r = 0.9
    assert tms_gap(1.0, r, 2.0) == pytest.approx((math.cosh(2 * r) - 1.0) * 2.0)
    assert tms_gap(2.0, 1.0) == pytest.approx(4.0 * math.sinh(1.0) ** 2)
    with pytest.raises(InvalidParamsError):
        tms_gap(0.5, 1.0)


def test_tms_gap_increasing_in_k_reg_saturates():
    r = 0.7
    gaps = [tms_gap(k, r) for k in (1.0, 10.0, 100.0, 1000.0)]
    assert all(b > a for a, b in zip(gaps, gaps[1:]))
    regs = [ergotropy_report(tms(k, r)).reg for k in (10.0, 100.0, 1000.0)]
    diffs = [abs(b - a) for a, b in zip(regs, regs[1:])]
    assert diffs[1] < diffs[0]
    # REG of TMS tends to cosh(2r) - 1
    assert regs[-1] == pytest.approx(math.cosh(2 * r) - 1.0, rel=2e-3)


def test_vectorised_reg_matches_pipeline(rng):
    for i in range(50):
        _, s = random_gaussian(rng, i)
        sf = standard_form(s)
        vec = reg_standard_form_vec(sf.a, sf.b, sf.c1, sf.c2, 2.0)
        rep = ergotropy_report(s, ModePair.from_ratio(2.0))
        assert float(vec) == pytest.approx(rep.reg, rel=1e-6, abs=1e-9)


def test_vectorised_reg_nan_for_pure():
    a = math.cosh(1.0)
    c = math.sinh(1.0)
    assert np.isnan(reg_standard_form_vec(a, a, c, -c))


@settings(max_examples=80, deadline=None)
@given(k=st.floats(1.0, 5.0), r=st.floats(0.0, 2.0), w=st.floats(0.1, 10.0))
def test_tms_gap_property(k, r, w):
    rep = ergotropy_report(tms(k, r), ModePair(w, w))
    assert rep.gap == pytest.approx(tms_gap(k, r, w), rel=1e-9, abs=1e-12)
