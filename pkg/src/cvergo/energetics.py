"""Mean energy, Gaussian passive energies, ergotropic gap and relative gap.

Energies use the convention in which the vacuum has zero energy:
``E = 1/4 sum_k omega_k (Tr sigma_k - 2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exceptions import DegeneratePurityError, InvalidParamsError
from .phase_space import (
    BlochMessiahParams,
    as_covariance,
    local_invariants,
    require_physical,
    spectrum_from_invariants,
    symplectic_eigenvalues,
)

__all__ = [
    "BlochMessiahParams",
    "EnergyReport",
    "ModePair",
    "ergotropy_report",
    "mean_energy",
    "passive_energies",
    "reg_closed_form",
    "tms_gap",
]

PURITY_TOL = 1e-9


@dataclass(frozen=True)
class ModePair:
    """Oscillator frequencies of the two modes, with ``omega_a <= omega_b``."""

    omega_a: float = 1.0
    omega_b: float = 1.0

    def __post_init__(self):
        if not (self.omega_a > 0 and self.omega_b > 0):
            raise InvalidParamsError("frequencies must be positive")
        if self.omega_a > self.omega_b:
            raise InvalidParamsError(
                "omega_a must not exceed omega_b; relabel the modes (see swap_modes)"
            )

    @property
    def alpha(self):
        return self.omega_b / self.omega_a

    @classmethod
    def from_ratio(cls, alpha, omega=1.0):
        return cls(omega, alpha * omega)


def mean_energy(sigma, modes=ModePair()):
    s = as_covariance(sigma)
    return 0.25 * float(
        modes.omega_a * (s[0, 0] + s[1, 1] - 2.0) + modes.omega_b * (s[2, 2] + s[3, 3] - 2.0)
    )


def _passive_from_numbers(a_loc, b_loc, nu_p, nu_m, modes):
    # the larger symplectic eigenvalue sits on the cheaper mode
    w_lo, w_hi = sorted((modes.omega_a, modes.omega_b))
    e_local = 0.5 * (modes.omega_a * (a_loc - 1.0) + modes.omega_b * (b_loc - 1.0))
    e_global = 0.5 * (w_lo * (nu_p - 1.0) + w_hi * (nu_m - 1.0))
    return e_local, e_global


def passive_energies(sigma, modes=ModePair()):
    """Energies ``(E_local_passive, E_global_passive)`` under Gaussian unitaries.

    The local passive energy uses each mode's own invariant
    ``sqrt(det sigma_X)``; the global one uses the symplectic spectrum.
    """
    s = require_physical(sigma)
    det_a, det_b, _, _ = local_invariants(s)
    spec = symplectic_eigenvalues(s)
    return _passive_from_numbers(
        math.sqrt(det_a), math.sqrt(det_b), spec.nu_plus, spec.nu_minus, modes
    )


def reg_from_energies(e_local, e_global):
    """Relative gap and degeneracy flag from the two passive energies.

    Returns ``(reg, degenerate)``.  A globally pure correlated state has
    ``reg=None, degenerate=True``; the vacuum-like 0/0 case gives ``0.0``.
    """
    gap = e_local - e_global
    if e_global > PURITY_TOL:
        return gap / e_global, False
    if gap > PURITY_TOL:
        return None, True
    return 0.0, False


@dataclass(frozen=True)
class EnergyReport:
    mean_energy: float
    e_local_passive: float
    e_global_passive: float
    gap: float
    reg: Optional[float]
    gaussian_ergotropy_global: float
    gaussian_ergotropy_local: float
    degenerate_purity: bool = False
    # set when the higher-frequency mode carries the larger local invariant
    frequency_pairing_flag: bool = False

    def as_dict(self):
        return dict(self.__dict__)


def ergotropy_report(sigma, modes=ModePair()):
    s = require_physical(sigma)
    return _report(s, symplectic_eigenvalues(s), modes)


def _report(s, spec, modes):
    # s already validated as physical
    det_a, det_b, _, _ = local_invariants(s)
    a_loc, b_loc = math.sqrt(det_a), math.sqrt(det_b)
    energy = mean_energy(s, modes)
    e_lp, e_gp = _passive_from_numbers(a_loc, b_loc, spec.nu_plus, spec.nu_minus, modes)
    reg, degenerate = reg_from_energies(e_lp, e_gp)
    flag = modes.omega_a < modes.omega_b and b_loc > a_loc + PURITY_TOL
    return EnergyReport(
        mean_energy=energy,
        e_local_passive=e_lp,
        e_global_passive=e_gp,
        gap=e_lp - e_gp,
        reg=reg,
        gaussian_ergotropy_global=energy - e_gp,
        gaussian_ergotropy_local=energy - e_lp,
        degenerate_purity=degenerate,
        frequency_pairing_flag=flag,
    )


def local_invariants_bm(params):
    """Per-mode invariants ``(a, b)`` of a Bloch-Messiah state in closed form."""
    k, g = params.k, params.gamma
    c2, s2 = math.cos(params.theta) ** 2, math.sin(params.theta) ** 2
    ratio = (params.z_a ** 2 + params.z_b ** 2) / (params.z_a * params.z_b)
    cross = (k * k - g * g) * c2 * s2 * ratio
    a = math.sqrt((k + g) ** 2 * c2 * c2 + (k - g) ** 2 * s2 * s2 + cross)
    b = math.sqrt((k - g) ** 2 * c2 * c2 + (k + g) ** 2 * s2 * s2 + cross)
    return a, b


def reg_closed_form(params, alpha=1.0):
    """Relative ergotropic gap of a Bloch-Messiah state without building its CM.

    ``|gamma|`` enters the global passive energy, so states whose hotter
    thermal core sits on the higher-frequency mode are handled as well.

    Raises
    ------
    DegeneratePurityError
        If the global passive energy vanishes (pure states).
    """
    if alpha < 1.0:
        raise InvalidParamsError("alpha = omega_b/omega_a must be >= 1")
    k, g = params.k, abs(params.gamma)
    denom = (k - 1.0) * (1.0 + alpha) + g * (1.0 - alpha)
    if denom <= PURITY_TOL:
        raise DegeneratePurityError("global passive energy vanishes")
    a, b = local_invariants_bm(params)
    return (a + alpha * b - (k * (1.0 + alpha) + g * (1.0 - alpha))) / denom


def tms_gap(k, r, omega=1.0):
    """Ergotropic gap ``2 k omega sinh^2 r`` of a two-mode squeezed thermal state."""
    if k < 1.0:
        raise InvalidParamsError("k must be >= 1")
    return 2.0 * k * omega * math.sinh(r) ** 2


def reg_standard_form_vec(a, b, c1, c2, alpha=1.0):
    """Vectorised relative gap from standard-form entries (``omega_a = 1``).

    Points with vanishing global passive energy come back as ``nan``.
    """
    a, b, c1, c2 = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (a, b, c1, c2)))
    det_c = c1 * c2
    det_s = (a * b - c1 * c1) * (a * b - c2 * c2)
    nu_p, nu_m = spectrum_from_invariants(a * a, b * b, det_c, det_s)
    e_lp = 0.5 * ((a - 1.0) + alpha * (b - 1.0))
    e_gp = 0.5 * ((nu_p - 1.0) + alpha * (nu_m - 1.0))
    with np.errstate(divide="ignore", invalid="ignore"):
        reg = np.where(e_gp > PURITY_TOL, (e_lp - e_gp) / e_gp, np.nan)
    return reg
