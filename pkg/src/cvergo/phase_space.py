"""Two-mode covariance matrices: validation, symplectic spectrum, standard form.

Quadratures are ordered ``(x_A, p_A, x_B, p_B)`` and the vacuum covariance
matrix is the identity.  All functions are pure and return fresh arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import (
    DegenerateBlockError,
    InvalidParamsError,
    NonPhysicalError,
    NotSymplecticError,
)

#: Two-mode symplectic form, xpxp ordering.
OMEGA = np.array(
    [
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0, 0.0],
    ]
)
OMEGA.setflags(write=False)

SYMMETRY_TOL = 1e-12
PHYSICAL_TOL = 1e-9
SYMPLECTIC_TOL = 1e-10

# permutation taking xxpp-ordered vectors to xpxp
_XXPP_TO_XPXP = np.array([0, 2, 1, 3])


def as_covariance(sigma, ordering="xpxp"):
    """Validate and return a read-only 4x4 covariance matrix in xpxp ordering.

    Accepts anything ``np.asarray`` understands, including a flat sequence of
    16 numbers in row-major order.  Rounding-level asymmetry (scaled by the
    largest entry) is removed by symmetrizing; anything larger is rejected.
    """
    if (
        ordering == "xpxp"
        and isinstance(sigma, np.ndarray)
        and sigma.shape == (4, 4)
        and sigma.dtype == np.float64
        and not sigma.flags.writeable
        and np.array_equal(sigma, sigma.T)
        and np.isfinite(sigma).all()
    ):
        # already validated (our own output); skip the copy
        return sigma
    arr = np.array(sigma, dtype=float)
    if arr.shape == (16,):
        arr = arr.reshape(4, 4)
    if arr.shape != (4, 4):
        raise ValueError(f"expected a 4x4 covariance matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonPhysicalError("covariance matrix has non-finite entries")
    if ordering == "xxpp":
        arr = arr[np.ix_(_XXPP_TO_XPXP, _XXPP_TO_XPXP)]
    elif ordering != "xpxp":
        raise ValueError(f"unknown quadrature ordering {ordering!r}")
    scale = max(1.0, float(np.max(np.abs(arr))))
    if np.max(np.abs(arr - arr.T)) > SYMMETRY_TOL * scale:
        raise ValueError("covariance matrix is not symmetric")
    arr = 0.5 * (arr + arr.T)
    arr.setflags(write=False)
    return arr


def blocks(sigma):
    """Return the 2x2 blocks ``(sigma_A, sigma_B, sigma_AB)``."""
    s = np.asarray(sigma)
    return s[:2, :2], s[2:, 2:], s[:2, 2:]


def _det2(m):
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def local_invariants(sigma):
    """The four local-symplectic invariants ``(det A, det B, det C, det sigma)``."""
    s = np.asarray(sigma)
    a, b, c = blocks(s)
    return _det2(a), _det2(b), _det2(c), float(np.linalg.det(s))


def swap_modes(sigma):
    """Relabel A <-> B."""
    s = np.asarray(sigma)
    perm = np.array([2, 3, 0, 1])
    return as_covariance(s[np.ix_(perm, perm)])


@dataclass(frozen=True)
class SymplecticSpectrum:
    nu_plus: float
    nu_minus: float
    gamma_invariant: float

    @property
    def mean(self):
        """Mean thermal fluctuation factor ``k = (nu+ + nu-)/2``."""
        return 0.5 * (self.nu_plus + self.nu_minus)

    @property
    def difference(self):
        """Fluctuation difference ``gamma = (nu+ - nu-)/2`` (never negative)."""
        return 0.5 * (self.nu_plus - self.nu_minus)


def spectrum_from_invariants(det_a, det_b, det_c, det_sigma):
    """Vectorised ``(nu_plus, nu_minus)`` from the local invariants.

    ``nu^2 = (G +- sqrt(G^2 - 4 det sigma)) / 2`` with
    ``G = det A + det B + 2 det C``.  Rounding-level negative discriminants
    are clipped to zero; genuine violations are left to the caller.
    """
    g = np.asarray(det_a + det_b + 2.0 * det_c, dtype=float)
    disc = np.sqrt(np.clip(g * g - 4.0 * det_sigma, 0.0, None))
    nu_p = np.sqrt(np.clip(0.5 * (g + disc), 0.0, None))
    nu_m = np.sqrt(np.clip(0.5 * (g - disc), 0.0, None))
    return nu_p, nu_m


def symplectic_eigenvalues(sigma):
    """Symplectic eigenvalues of a two-mode covariance matrix.

    Raises
    ------
    NonPhysicalError
        If ``det sigma < 0`` or the eigenvalues of ``i Omega sigma`` are complex.
    """
    det_a, det_b, det_c, det_s = local_invariants(as_covariance(sigma))
    gamma = det_a + det_b + 2.0 * det_c
    if det_s < -PHYSICAL_TOL * max(1.0, gamma * gamma):
        raise NonPhysicalError(f"negative determinant {det_s:.3e}")
    disc = gamma * gamma - 4.0 * det_s
    if disc < -PHYSICAL_TOL * max(1.0, gamma * gamma):
        raise NonPhysicalError(f"complex symplectic eigenvalues (discriminant {disc:.3e})")
    try:
        nu_p, nu_m = _williamson_moduli(sigma)
    except np.linalg.LinAlgError:
        # not positive definite; fall back to the invariant formula
        nu_p, nu_m = spectrum_from_invariants(det_a, det_b, det_c, det_s)
    return SymplecticSpectrum(float(nu_p), float(nu_m), float(gamma))


def _williamson_moduli(sigma):
    # i L^T Omega L is Hermitian with eigenvalues +-nu; unlike the invariant
    # formula this stays accurate when nu_plus ~ nu_minus
    chol = np.linalg.cholesky(as_covariance(sigma))
    ev = np.linalg.eigvalsh(1j * (chol.T @ OMEGA @ chol))
    return ev[3], ev[2]


@dataclass(frozen=True)
class PhysicalityReport:
    is_physical: bool
    nu_minus: float
    worst_violation: float


def check_physical(sigma):
    """Report whether ``sigma`` satisfies ``sigma + i Omega >= 0``.

    Never raises for a symmetric 4x4 input.  ``worst_violation`` is how far the
    smaller symplectic eigenvalue (or the smallest ordinary eigenvalue, for
    non-positive matrices) falls below its bound; zero when physical.
    """
    s = as_covariance(sigma)
    try:
        _, nu_minus = _williamson_moduli(s)
    except np.linalg.LinAlgError:
        min_eig = float(np.linalg.eigvalsh(s)[0])
        return PhysicalityReport(False, float("nan"), 1.0 - min(min_eig, 0.0))
    nu_minus = float(nu_minus)
    violation = max(0.0, 1.0 - nu_minus)
    return PhysicalityReport(nu_minus >= 1.0 - PHYSICAL_TOL, nu_minus, violation)


def require_physical(sigma):
    s = as_covariance(sigma)
    report = check_physical(s)
    if not report.is_physical:
        raise NonPhysicalError(
            f"state violates the uncertainty relation (nu_minus={report.nu_minus:.6g})"
        )
    return s


@dataclass(frozen=True)
class StandardFormParams:
    """Local invariants ``a, b, c1, c2`` of a two-mode covariance matrix."""

    a: float
    b: float
    c1: float
    c2: float

    def matrix(self):
        a, b, c1, c2 = self.a, self.b, self.c1, self.c2
        return as_covariance(
            [
                [a, 0.0, c1, 0.0],
                [0.0, a, 0.0, c2],
                [c1, 0.0, b, 0.0],
                [0.0, c2, 0.0, b],
            ]
        )

    def is_product(self, tol=1e-9):
        return abs(self.c1) <= tol and abs(self.c2) <= tol


def standard_form(sigma):
    """Reduce ``sigma`` to its standard-form parameters.

    Solves for ``c1^2, c2^2`` as the roots of
    ``t^2 - s t + (det C)^2 = 0`` where ``s`` follows from ``det sigma``.
    Modes are never swapped, so ``a`` always belongs to mode A even when
    ``a < b``.
    """
    det_a, det_b, det_c, det_s = local_invariants(as_covariance(sigma))
    if det_a < 0 or det_b < 0:
        raise NonPhysicalError("local block with negative determinant")
    a = math.sqrt(det_a)
    b = math.sqrt(det_b)
    ab = a * b
    if ab == 0.0:
        raise DegenerateBlockError("a local block is singular")
    s = (ab * ab + det_c * det_c - det_s) / ab
    s = max(s, 2.0 * abs(det_c))  # c1^2 + c2^2 >= 2|c1 c2|
    disc = math.sqrt(max(s * s - 4.0 * det_c * det_c, 0.0))
    big = 0.5 * (s + disc)
    small = max(0.5 * (s - disc), 0.0)
    c1 = math.sqrt(big)
    c2 = math.copysign(math.sqrt(small), det_c) if det_c != 0.0 else 0.0
    if c1 < abs(c2):  # equal roots; keep c1 >= |c2|
        c1 = abs(c2)
    return StandardFormParams(a, b, c1, c2)


def canonical_standard_form(sigma):
    """Standard-form params read off a matrix that is already block diagonal.

    Used to compare a matrix obtained by explicit local operations with the
    invariant-based solver: the entries of the correlation block are
    reordered and re-signed into the ``c1 >= |c2|`` convention.
    """
    s = np.asarray(sigma)
    cx, cp = s[0, 2], s[1, 3]
    c1 = max(abs(cx), abs(cp))
    c2 = math.copysign(min(abs(cx), abs(cp)), cx * cp)
    a = math.sqrt(max(_det2(s[:2, :2]), 0.0))
    b = math.sqrt(max(_det2(s[2:, 2:]), 0.0))
    return StandardFormParams(a, b, c1, c2)


# ---------------------------------------------------------------------------
# symplectic building blocks


def phase_rotation(phi_a, phi_b):
    ca, sa, cb, sb = math.cos(phi_a), math.sin(phi_a), math.cos(phi_b), math.sin(phi_b)
    return np.array(
        [
            [ca, sa, 0.0, 0.0],
            [-sa, ca, 0.0, 0.0],
            [0.0, 0.0, cb, sb],
            [0.0, 0.0, -sb, cb],
        ]
    )


def beam_splitter(theta):
    c, s = math.cos(theta), math.sin(theta)
    return np.array(
        [
            [c, 0.0, s, 0.0],
            [0.0, c, 0.0, s],
            [-s, 0.0, c, 0.0],
            [0.0, -s, 0.0, c],
        ]
    )


def local_squeezer(s_a, s_b):
    """``diag(s_a, 1/s_a, s_b, 1/s_b)``: rescale x by s and p by 1/s on each mode."""
    if s_a <= 0 or s_b <= 0:
        raise InvalidParamsError("squeezing factors must be positive")
    return np.diag([s_a, 1.0 / s_a, s_b, 1.0 / s_b])


def is_symplectic(S, tol=SYMPLECTIC_TOL):
    S = np.asarray(S, dtype=float)
    if S.shape != (4, 4):
        return False
    scale = max(1.0, float(np.max(np.abs(S))) ** 2)
    return bool(np.max(np.abs(S @ OMEGA @ S.T - OMEGA)) <= tol * scale)


def apply_symplectic(S, sigma):
    """Return ``S sigma S^T``."""
    S = np.asarray(S, dtype=float)
    if not is_symplectic(S):
        raise NotSymplecticError("S Omega S^T differs from Omega")
    s = as_covariance(sigma)
    out = S @ s @ S.T
    return as_covariance(0.5 * (out + out.T))


# ---------------------------------------------------------------------------
# Bloch-Messiah parametrization


@dataclass(frozen=True)
class BlochMessiahParams:
    """Generative parameters of a two-mode Gaussian state.

    ``k_a = k + gamma`` and ``k_b = k - gamma`` are the thermal factors,
    ``z_a, z_b`` multiply the x quadrature variance of each mode before the
    beam splitter of angle ``theta``; ``phi_a, phi_b`` are final local phases.
    """

    k: float
    gamma: float = 0.0
    z_a: float = 1.0
    z_b: float = 1.0
    theta: float = 0.0
    phi_a: float = 0.0
    phi_b: float = 0.0

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.k, self.gamma, self.z_a, self.z_b,
                                              self.theta, self.phi_a, self.phi_b)):
            raise InvalidParamsError("non-finite Bloch-Messiah parameter")
        if self.k - abs(self.gamma) < 1.0 - PHYSICAL_TOL:
            raise InvalidParamsError(
                f"thermal factors k +- gamma must be >= 1 (k={self.k}, gamma={self.gamma})"
            )
        if self.z_a <= 0 or self.z_b <= 0:
            raise InvalidParamsError("squeezing factors z_a, z_b must be positive")

    @property
    def k_a(self):
        return self.k + self.gamma

    @property
    def k_b(self):
        return self.k - self.gamma

    def generator(self):
        """The symplectic ``P B S`` acting on the thermal core."""
        return (
            phase_rotation(self.phi_a, self.phi_b)
            @ beam_splitter(self.theta)
            @ local_squeezer(math.sqrt(self.z_a), math.sqrt(self.z_b))
        )


def optimal_local_squeezings(params):
    """Local squeezings ``(r_A, r_B)`` that bring a Bloch-Messiah state to standard form.

    After undoing the local phases, conjugation by ``local_squeezer(r_A, r_B)``
    equalises the x and p variances of each mode; the correlation block is
    already diagonal.
    """
    if params.k - abs(params.gamma) < 1.0 - PHYSICAL_TOL:
        raise InvalidParamsError("unphysical thermal factors")
    ka, kb, za, zb = params.k_a, params.k_b, params.z_a, params.z_b
    c2 = math.cos(params.theta) ** 2
    s2 = math.sin(params.theta) ** 2
    r_a = ((ka * zb * c2 + kb * za * s2) / (za * zb * (ka * za * c2 + kb * zb * s2))) ** 0.25
    r_b = ((kb * za * c2 + ka * zb * s2) / (za * zb * (kb * zb * c2 + ka * za * s2))) ** 0.25
    return r_a, r_b


def standardizing_symplectic(params):
    """Local symplectic taking ``compose_bloch_messiah(params)`` to standard form."""
    r_a, r_b = optimal_local_squeezings(params)
    return local_squeezer(r_a, r_b) @ phase_rotation(params.phi_a, params.phi_b).T
