"""Entanglement criteria: PPT, REG bounds, Shchukin-Vogel, and the photon-subtracted threshold."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .energetics import PURITY_TOL, ModePair, _report, reg_standard_form_vec
from .exceptions import DegeneratePurityError, EmptyRegionError, InvalidParamsError, NonGaussianInputError
from .phase_space import as_covariance, local_invariants, require_physical, symplectic_eigenvalues
from .states import photon_subtracted_entries

VERDICT_TOL = 1e-12


class Verdict(str, enum.Enum):
    SEPARABLE = "SeparableCertified"
    ENTANGLED = "EntangledCertified"
    INDETERMINATE = "Indeterminate"


def ppt_value(sigma):
    """Left side of ``det s - det A - det B + 2 det C + 1 >= 0``."""
    det_a, det_b, det_c, det_s = local_invariants(as_covariance(sigma))
    return float(det_s - det_a - det_b + 2.0 * det_c + 1.0)


def _ppt_tol(sigma):
    # det sigma carries rounding of order |sigma|^4 * eps
    return VERDICT_TOL * max(1.0, float(np.max(np.abs(sigma)))) ** 4


def ppt_separable(sigma):
    """``(separable, ppt_value)``; sufficient for separability only for Gaussian states."""
    s = require_physical(sigma)
    value = ppt_value(s)
    return bool(value >= -_ppt_tol(s)), float(value)


def theorem2_bounds(k, gamma, alpha=1.0):
    """REG bounds ``(b_sep_max, b_ent_min)`` for thermal factors ``k +- gamma`` and ratio ``alpha``.

    Separable states never exceed ``b_sep_max``; entangled states always
    exceed ``b_ent_min``.  Only ``|gamma|`` matters.
    """
    g = abs(gamma)
    if k - g < 1.0 - 1e-9:
        raise InvalidParamsError("k - |gamma| must be >= 1")
    if alpha < 1.0:
        raise InvalidParamsError("alpha must be >= 1")
    denom = (k - 1.0) * (1.0 + alpha) + g * (1.0 - alpha)
    if denom <= VERDICT_TOL:
        raise DegeneratePurityError("bounds undefined for globally pure states")
    lead = -(k * (1.0 + alpha) + g * (1.0 - alpha))
    base = 1.0 + k ** 4 + g ** 4 + 2.0 * k * k + 2.0 * g * g - 2.0 * k * k * g * g
    half = 0.5 * (1.0 + alpha)
    b_sep = (lead + half * math.sqrt(base + 8.0 * k * g)) / denom
    b_ent = (lead + half * math.sqrt(max(base - 8.0 * k * g, 0.0))) / denom
    return b_sep, b_ent


@dataclass(frozen=True)
class WitnessVerdict:
    verdict: Verdict
    reg_value: Optional[float]
    bound_sep: float
    bound_ent: float
    ppt_value: float
    ppt_separable: bool
    source: str  # "reg_bounds" or "pure_gap"


def classify(sigma, modes=ModePair(), gaussian=True):
    """Classify a two-mode Gaussian state from its relative ergotropic gap.

    ``k`` and ``gamma`` for the bounds come from the state's own symplectic
    spectrum.  Globally pure states have no finite REG; they are entangled
    exactly when their ergotropic gap is positive.
    """
    if not gaussian:
        raise NonGaussianInputError("REG bounds are only established for Gaussian states")
    s = require_physical(sigma)
    spec = symplectic_eigenvalues(s)
    report = _report(s, spec, modes)
    ppt = ppt_value(s)
    sep = bool(ppt >= -_ppt_tol(s))
    if report.degenerate_purity or spec.mean - 1.0 <= PURITY_TOL:
        verdict = Verdict.ENTANGLED if report.gap > PURITY_TOL else Verdict.SEPARABLE
        return WitnessVerdict(verdict, report.reg, math.nan, math.nan, ppt, sep, "pure_gap")
    b_sep, b_ent = theorem2_bounds(spec.mean, spec.difference, modes.alpha)
    reg = report.reg
    if reg > b_sep + VERDICT_TOL:
        verdict = Verdict.ENTANGLED
    elif reg <= b_ent + VERDICT_TOL:
        verdict = Verdict.SEPARABLE
    else:
        verdict = Verdict.INDETERMINATE
    return WitnessVerdict(verdict, reg, b_sep, b_ent, ppt, sep, "reg_bounds")


def sv_value(moments):
    """``<a^+a><b^+b> - <ab><a^+b^+>``; negative values certify entanglement."""
    return float((moments.n_a * moments.n_b - moments.ab * moments.a_dag_b_dag).real)


def sv_witness(moments):
    value = sv_value(moments)
    return value < -VERDICT_TOL, value


def sv_value_standard_form(a, b, c1, c2):
    """Vectorised Shchukin-Vogel value from standard-form entries."""
    ab = (np.asarray(c1) - np.asarray(c2)) / 4.0
    return (np.asarray(a) - 1.0) * (np.asarray(b) - 1.0) / 4.0 - ab * ab


@dataclass(frozen=True)
class GridSpec:
    """Scan region for the photon-subtracted threshold.

    ``k`` runs over ``n_k`` evenly spaced points in ``(k_min, k_max]`` and
    ``z`` over ``n_z`` evenly spaced points in ``(z_min, 1]``.
    """

    k_min: float = 1.0
    k_max: float = 2.4
    n_k: int = 200
    z_min: float = 0.0
    z_max: float = 1.0
    n_z: int = 200
    alpha: float = 1.0

    def __post_init__(self):
        if self.n_k < 1 or self.n_z < 1:
            raise InvalidParamsError("grid sizes must be positive")
        if not (1.0 <= self.k_min < self.k_max):
            raise InvalidParamsError("need 1 <= k_min < k_max")
        if not (0.0 <= self.z_min < self.z_max <= 1.0):
            raise InvalidParamsError("need 0 <= z_min < z_max <= 1")

    def axes(self):
        ks = np.linspace(self.k_min, self.k_max, self.n_k + 1)[1:]
        zs = np.linspace(self.z_min, self.z_max, self.n_z + 1)[1:]
        return ks, zs

    def refined(self, factor=2):
        return GridSpec(self.k_min, self.k_max, self.n_k * factor,
                        self.z_min, self.z_max, self.n_z * factor, self.alpha)


def photon_subtracted_surface(ks, zs, alpha=1.0):
    """REG and SV value of photon-subtracted TMS states on the ``ks x zs`` mesh.

    Returns ``(reg, sv, valid)``; ``valid`` masks out points where the
    initial state is the vacuum.
    """
    kk, zz = np.meshgrid(np.asarray(ks, dtype=float), np.asarray(zs, dtype=float), indexing="ij")
    valid = kk * (zz + 1.0 / zz) - 2.0 > 1e-12
    a, b, c1, c2 = photon_subtracted_entries(np.where(valid, kk, 2.0), np.where(valid, zz, 0.5))
    reg = reg_standard_form_vec(a, b, c1, c2, alpha)
    sv = sv_value_standard_form(a, b, c1, c2)
    valid &= np.isfinite(reg)
    return reg, sv, valid


def photon_subtracted_grid(grid):
    """Evaluate REG and SV on the grid; returns ``(ks, zs, reg, sv, valid)``."""
    ks, zs = grid.axes()
    return (ks, zs) + photon_subtracted_surface(ks, zs, grid.alpha)


def reg_threshold_search(grid=GridSpec()):
    """Largest Gaussian REG among grid points the SV test cannot call entangled.

    Returns ``(threshold, (k, z))``.  Ties resolve to the smallest ``k`` and
    then the smallest ``z`` (row-major argmax).
    """
    ks, zs, reg, sv, valid = photon_subtracted_grid(grid)
    region = valid & (sv >= -VERDICT_TOL)
    if not region.any():
        raise EmptyRegionError("no grid point satisfies the SV inequality")
    masked = np.where(region, reg, -np.inf)
    i, j = np.unravel_index(int(np.argmax(masked)), masked.shape)
    return float(masked[i, j]), (float(ks[i]), float(zs[j]))
