"""Standard (all-unitary) ergotropic gaps for finite-spectrum Fock states.

These use the Hamiltonian ``omega (a^+ a + 1/2)`` per mode, i.e. the vacuum
has energy ``omega/2``.  Gaps are differences of energies, so the offset
relative to the Gaussian code (vacuum = 0) cancels.
"""

from __future__ import annotations

import math

from .energetics import ModePair, ergotropy_report
from .exceptions import InsufficientLevelsError, InvalidParamsError
from .states import bell_mixture_cm

_NORM_TOL = 1e-12


def single_mode_levels(omega, n_levels):
    return [omega * (n + 0.5) for n in range(n_levels)]


def two_mode_levels(omega, max_total):
    """Two-mode energies up to total excitation ``max_total``, degeneracies expanded.

    Level ``N`` appears ``N + 1`` times (states ``|0,N>, |1,N-1>, ...``).
    """
    out = []
    for total in range(max_total + 1):
        out.extend([omega * (total + 1.0)] * (total + 1))
    return out


def _check_spectrum(spectrum):
    if any(p < -_NORM_TOL for p in spectrum):
        raise InvalidParamsError("negative probability in spectrum")
    if abs(math.fsum(spectrum) - 1.0) > _NORM_TOL:
        raise InvalidParamsError("spectrum does not sum to one")


def passive_energy(spectrum, levels):
    """Energy of the passive state: largest populations on the lowest levels.

    ``levels`` must list one energy per eigenstate (degenerate levels
    repeated) in ascending order.  Sorting is stable, so ties keep input order.
    """
    _check_spectrum(spectrum)
    if len(spectrum) > len(levels):
        raise InsufficientLevelsError(
            f"{len(spectrum)} populations but only {len(levels)} levels"
        )
    if any(b < a for a, b in zip(levels, levels[1:])):
        raise ValueError("levels must be sorted ascending")
    pops = sorted(spectrum, key=lambda p: -p)
    return math.fsum(p * e for p, e in zip(pops, levels))


def local_passive_energy(reduced_a, reduced_b, omega=1.0):
    """Sum of the per-mode passive energies of the two reduced spectra."""
    n = max(len(reduced_a), len(reduced_b))
    levels = single_mode_levels(omega, n)
    return passive_energy(reduced_a, levels) + passive_energy(reduced_b, levels)


def global_passive_energy(spectrum, omega=1.0):
    levels = []
    total = 0
    while len(levels) < len(spectrum):
        levels = two_mode_levels(omega, total)
        total += 1
    return passive_energy(spectrum, levels)


def std_gap_fock_superposition(n, m, omega=1.0):
    """Standard ergotropic gap of ``(|n,m> + |m,n>)/sqrt(2)``."""
    if n < 0 or m < 0:
        raise InvalidParamsError("occupation numbers must be non-negative")
    reduced = [1.0] if n == m else [0.5, 0.5]
    return local_passive_energy(reduced, reduced, omega) - global_passive_energy([1.0], omega)


def std_gap_bell_mixture(lam, omega=1.0):
    """Standard ergotropic gap of the Bell-state mixture with weight ``lam``."""
    if not 0.0 <= lam <= 1.0:
        raise InvalidParamsError("lambda must lie in [0, 1]")
    reduced = [0.5, 0.5]
    return local_passive_energy(reduced, reduced, omega) - global_passive_energy(
        [lam, 1.0 - lam], omega
    )


def gaussian_reg_bell_mixture(lam, n=0):
    """Gaussian relative ergotropic gap of the Bell-state mixture, equal frequencies.

    With ``s = sqrt(4 - (2 lam - 1)^2)`` the symplectic eigenvalues are
    ``(n+1) s`` and the result is ``(n+1)(2 - s) / ((n+1) s - 1)``.  For
    ``n = 0`` this is ``(2 - s)/(s - 1)``.
    """
    if not 0.0 <= lam <= 1.0:
        raise InvalidParamsError("lambda must lie in [0, 1]")
    s = math.sqrt(4.0 - (2.0 * lam - 1.0) ** 2)
    return (n + 1) * (2.0 - s) / ((n + 1) * s - 1.0)


def pipeline_reg_bell_mixture(lam, n=0):
    """Same quantity via the covariance-matrix pipeline (for cross-checking)."""
    return ergotropy_report(bell_mixture_cm(n, lam).sigma, ModePair()).reg
