"""Entropic correlation measures and the REG/QMI independence check.

All entropies are in bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateInputError, DomainError
from .phase_space import local_invariants, require_physical, symplectic_eigenvalues

_H_CUTOFF = 1e-12


def entropy_h(x):
    """Von Neumann entropy of a single-mode Gaussian state with invariant ``x``.

    ``h(x) = (x+1)/2 log2((x+1)/2) - (x-1)/2 log2((x-1)/2)``, with ``h(1) = 0``.
    """
    if x < 1.0 - 1e-9:
        raise DomainError(f"h(x) requires x >= 1, got {x}")
    if x - 1.0 < _H_CUTOFF:
        return 0.0
    p, m = 0.5 * (x + 1.0), 0.5 * (x - 1.0)
    return p * math.log2(p) - m * math.log2(m)


def _dh(x):
    # derivative of h: 1/2 log2((x+1)/(x-1))
    return 0.5 * (math.log2(0.5 * (x + 1.0)) - math.log2(0.5 * (x - 1.0)))


def mutual_information(sigma):
    """Quantum mutual information ``h(a) + h(b) - h(nu+) - h(nu-)``."""
    s = require_physical(sigma)
    det_a, det_b, _, _ = local_invariants(s)
    spec = symplectic_eigenvalues(s)
    return (
        entropy_h(math.sqrt(det_a))
        + entropy_h(math.sqrt(det_b))
        - entropy_h(max(spec.nu_plus, 1.0))
        - entropy_h(max(spec.nu_minus, 1.0))
    )


def conditional_entropy(sigma):
    """``S(B|A) = S(AB) - S(A)`` of a Gaussian state."""
    s = require_physical(sigma)
    det_a, _, _, _ = local_invariants(s)
    spec = symplectic_eigenvalues(s)
    return (
        entropy_h(max(spec.nu_plus, 1.0))
        + entropy_h(max(spec.nu_minus, 1.0))
        - entropy_h(math.sqrt(det_a))
    )


def monotone_map_f(x, gamma_coef):
    """Map the pure-state ergotropic gap onto the mutual information.

    ``gamma_coef`` is ``2/(omega_a + omega_b)``.
    """
    if x < 0:
        raise DomainError("gap must be non-negative")
    y = gamma_coef * x
    if y == 0.0:
        return 0.0
    return (y + 2.0) * math.log2(0.5 * (y + 2.0)) - y * math.log2(0.5 * y)


def conditional_entropy_witness(k, tau):
    """Closed-form ``S(B|A) = 2 h(k) - h(k tau)`` for equal-temperature, equal-frequency states.

    Negative values certify entanglement.
    """
    return 2.0 * entropy_h(k) - entropy_h(k * tau)


def tau_of(theta, z_a, z_b):
    c2, s2 = math.cos(theta) ** 2, math.sin(theta) ** 2
    ratio = (z_a * z_a + z_b * z_b) / (z_a * z_b)
    return math.sqrt(c2 * c2 + s2 * s2 + c2 * s2 * ratio)


def tau_from_covariance(sigma):
    """Recover the squeezing/mixing factor ``tau`` from a covariance matrix.

    Inverts the Bloch-Messiah local invariants using ``k, gamma`` from the
    symplectic spectrum; reduces to ``a/k`` when the two thermal factors agree.
    """
    s = require_physical(sigma)
    det_a, det_b, _, _ = local_invariants(s)
    spec = symplectic_eigenvalues(s)
    k, g = spec.mean, spec.difference
    diff = det_a - det_b
    t2 = 1.0 + (det_a + det_b - 2.0 * k * k - diff * diff / (8.0 * k * k)) / (2.0 * (k * k - g * g))
    return math.sqrt(max(t2, 1.0))


@dataclass(frozen=True)
class CorrelationReport:
    qmi: float
    conditional_entropy: float
    tau: float


def correlation_report(sigma):
    return CorrelationReport(
        qmi=mutual_information(sigma),
        conditional_entropy=conditional_entropy(sigma),
        tau=tau_from_covariance(sigma),
    )


# ---------------------------------------------------------------------------
# functional independence of REG and QMI (equal frequencies)


def _reg_equal_freq(a, b, nu_p, nu_m):
    return (a + b - nu_p - nu_m) / (nu_p + nu_m - 2.0)


def _qmi_invariants(a, b, nu_p, nu_m):
    return entropy_h(a) + entropy_h(b) - entropy_h(nu_p) - entropy_h(nu_m)


def reg_gradient(a, b, nu_p, nu_m):
    d = nu_p + nu_m - 2.0
    g = (2.0 - a - b) / (d * d)
    return np.array([1.0 / d, 1.0 / d, g, g])


def qmi_gradient(a, b, nu_p, nu_m):
    return np.array([_dh(a), _dh(b), -_dh(nu_p), -_dh(nu_m)])


@dataclass(frozen=True)
class IndependenceEvidence:
    jacobian: np.ndarray
    max_minor: float
    minor_columns: tuple
    fd_rel_error: float

    @property
    def rank2(self):
        return self.max_minor > 1e-9


def _central_diff(fn, x, step):
    grad = np.empty(4)
    for i in range(4):
        hi, lo = list(x), list(x)
        h = step * max(1.0, abs(x[i]))
        hi[i] += h
        lo[i] -= h
        grad[i] = (fn(*hi) - fn(*lo)) / (2.0 * h)
    return grad


def jacobian_independence(a, b, nu_plus, nu_minus, fd_step=1e-6):
    """Evidence that REG and QMI are functionally independent at one point.

    Builds the 2x4 Jacobian of (REG, QMI) with respect to
    ``(a, b, nu+, nu-)`` from analytic gradients, reports the largest
    absolute 2x2 minor and the worst relative disagreement with central
    finite differences.
    """
    if min(a, b, nu_plus, nu_minus) <= 1.0:
        raise DomainError("independence check needs a, b, nu+, nu- > 1")
    if a == b:
        raise DegenerateInputError("a == b: the REG gradient cannot separate a from b here")
    x = (a, b, nu_plus, nu_minus)
    jac = np.vstack([reg_gradient(*x), qmi_gradient(*x)])
    best, cols = 0.0, (0, 1)
    for i in range(4):
        for j in range(i + 1, 4):
            m = abs(jac[0, i] * jac[1, j] - jac[0, j] * jac[1, i])
            if m > best:
                best, cols = m, (i, j)
    fd = np.vstack(
        [_central_diff(_reg_equal_freq, x, fd_step), _central_diff(_qmi_invariants, x, fd_step)]
    )
    rel = np.abs(fd - jac) / np.maximum(np.abs(jac), 1e-300)
    return IndependenceEvidence(jac, best, cols, float(np.max(rel)))
