"""Constructors for the two-mode state families, plus the JSON state-file format.

State file (one JSON object)::

    {
      "ordering": "xpxp",            # or "xxpp"; converted to xpxp on load
      "omega_a": 1.0,
      "omega_b": 1.0,
      "cm": [16 numbers, row-major],
      "family": "BlochMessiah",      # see Family
      "params": {...},               # family-specific, informational
      "gaussian": true,
      "seed": null,                  # optional
      "first_moments": [4 numbers]   # optional; dropped with a warning
    }
"""

from __future__ import annotations

import enum
import json
import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from .energetics import ModePair
from .exceptions import InvalidParamsError, SubtractionFromVacuumError
from .phase_space import (
    BlochMessiahParams,
    as_covariance,
    swap_modes,
)

log = logging.getLogger(__name__)


class Family(str, enum.Enum):
    BLOCH_MESSIAH = "BlochMessiah"
    TMS = "TMS"
    PHOTON_SUBTRACTED_TMS = "PhotonSubtractedTMS"
    FOCK_SUPERPOSITION = "FockSuperposition"
    BELL_MIXTURE = "BellMixture"
    RAW = "Raw"


@dataclass(frozen=True)
class StateRecord:
    sigma: np.ndarray
    family: Family
    gaussian: bool
    params: dict = field(default_factory=dict)
    seed: Optional[int] = None


def compose_bloch_messiah(params):
    """Covariance matrix ``P B S V S^T B^T P^T`` of a Bloch-Messiah state."""
    if not isinstance(params, BlochMessiahParams):
        params = BlochMessiahParams(**params)
    g = params.generator()
    v = np.diag([params.k_a, params.k_a, params.k_b, params.k_b])
    out = g @ v @ g.T
    return as_covariance(0.5 * (out + out.T))


def tms(k, r):
    """Two-mode squeezed thermal state; ``z = exp(-2 r)`` in the other convention."""
    if k < 1.0:
        raise InvalidParamsError("k must be >= 1")
    a = k * math.cosh(2.0 * r)
    c = k * math.sinh(2.0 * r)
    return as_covariance(
        [
            [a, 0.0, c, 0.0],
            [0.0, a, 0.0, -c],
            [c, 0.0, a, 0.0],
            [0.0, -c, 0.0, a],
        ]
    )


def tms_bloch_messiah(k, z, gamma=0.0):
    """TMS-like state built by mixing oppositely squeezed thermal modes on a 50:50 splitter.

    With ``gamma = 0`` this equals ``tms(k, r)`` for ``z = exp(-2 r)``.
    """
    return BlochMessiahParams(k=k, gamma=gamma, z_a=z, z_b=1.0 / z, theta=math.pi / 4)


@dataclass(frozen=True)
class SamplerRanges:
    z_min: float = 0.05
    theta_min: float = 0.0
    theta_max: float = math.pi / 2


def _rng(seed, index):
    return np.random.default_rng([int(seed), int(index)])


def random_params(k, gamma, ranges=SamplerRanges(), seed=0, index=0):
    """Draw the free Bloch-Messiah parameters for fixed ``k, gamma``.

    Each ``(seed, index)`` pair gets its own generator, so ensembles can be
    produced in any order with identical results.
    """
    if k - abs(gamma) < 1.0:
        raise InvalidParamsError("k - |gamma| must be >= 1")
    rng = _rng(seed, index)
    lz = math.log(ranges.z_min)
    z_a, z_b = np.exp(rng.uniform(lz, -lz, size=2))
    theta = rng.uniform(ranges.theta_min, ranges.theta_max)
    phi_a, phi_b = rng.uniform(0.0, 2.0 * math.pi, size=2)
    return BlochMessiahParams(
        k=k, gamma=gamma, z_a=float(z_a), z_b=float(z_b), theta=float(theta),
        phi_a=float(phi_a), phi_b=float(phi_b),
    )


def random_state(k, gamma, ranges=SamplerRanges(), seed=0, index=0):
    params = random_params(k, gamma, ranges, seed, index)
    return StateRecord(
        sigma=compose_bloch_messiah(params),
        family=Family.BLOCH_MESSIAH,
        gaussian=True,
        params=asdict(params),
        seed=seed,
    )


def random_ensemble(n, k, gamma, ranges=SamplerRanges(), seed=0):
    return [random_state(k, gamma, ranges, seed, i) for i in range(n)]


def photon_subtracted_entries(k, z):
    """Standard-form entries ``(a, b, c1, c2)`` of a photon-subtracted TMS state.

    Works elementwise on arrays; no validation.
    """
    s = z + 1.0 / z
    a = k * s - 1.0
    b = (k * (z * z + 1.0 / (z * z)) - s) / (s - 2.0 / k)
    c1 = k * (1.0 / z - z)
    return a, b, c1, -c1


def _check_subtraction(k, z):
    if k < 1.0 or z <= 0.0:
        raise InvalidParamsError("need k >= 1 and z > 0")
    if k * (z + 1.0 / z) - 2.0 <= 1e-12:
        raise SubtractionFromVacuumError("initial state is the vacuum; nothing to subtract")


def photon_subtracted_tms(k, z):
    """TMS state ``tms(k, r)`` with ``z = exp(-2 r)`` after subtracting one photon from mode A."""
    _check_subtraction(k, z)
    a, b, c1, c2 = photon_subtracted_entries(k, z)
    sigma = as_covariance(
        [
            [a, 0.0, c1, 0.0],
            [0.0, a, 0.0, c2],
            [c1, 0.0, b, 0.0],
            [0.0, c2, 0.0, b],
        ]
    )
    return StateRecord(sigma, Family.PHOTON_SUBTRACTED_TMS, False, {"k": k, "z": z})


_PROJ_A = np.diag([1.0, 1.0, 0.0, 0.0])


def photon_subtract(sigma0, projector=_PROJ_A):
    """Covariance matrix after one-photon subtraction on the projected mode.

    ``sigma0 + 2 (sigma0 - I) P (sigma0 - I) / Tr[(sigma0 - I) P]``
    """
    s0 = np.asarray(sigma0, dtype=float)
    d = s0 - np.eye(4)
    tr = float(np.trace(d @ projector))
    if tr <= 1e-12:
        raise SubtractionFromVacuumError("projected mode is in its vacuum state")
    return as_covariance(s0 + 2.0 * d @ projector @ d / tr)


def fock_superposition_cm(n, m):
    """Covariance matrix of ``(|n,m> + |m,n>)/sqrt(2)``."""
    if n < 0 or m < 0:
        raise InvalidParamsError("occupation numbers must be non-negative")
    a = n + m + 1.0
    c = float(m * (n + 1 == m) + n * (m + 1 == n))
    sigma = as_covariance(
        [
            [a, 0.0, c, 0.0],
            [0.0, a, 0.0, c],
            [c, 0.0, a, 0.0],
            [0.0, c, 0.0, a],
        ]
    )
    return StateRecord(sigma, Family.FOCK_SUPERPOSITION, False, {"n": n, "m": m})


def bell_mixture_cm(n, lam):
    """Covariance matrix of ``lam |phi+><phi+| + (1-lam) |phi-><phi-|`` on ``|n,n>, |n+1,n+1>``."""
    if n < 0 or not 0.0 <= lam <= 1.0:
        raise InvalidParamsError("need n >= 0 and 0 <= lambda <= 1")
    a = 2.0 * (n + 1)
    c = abs(2.0 * lam - 1.0) * (n + 1)
    sigma = as_covariance(
        [
            [a, 0.0, c, 0.0],
            [0.0, a, 0.0, -c],
            [c, 0.0, a, 0.0],
            [0.0, -c, 0.0, a],
        ]
    )
    return StateRecord(sigma, Family.BELL_MIXTURE, False, {"n": n, "lambda": lam})


@dataclass(frozen=True)
class SecondMoments:
    n_a: float
    n_b: float
    ab: complex
    a_dag_b_dag: complex


def moments_from_cm(sigma):
    """Ladder-operator second moments of a zero-mean state."""
    s = as_covariance(sigma)
    ab = complex(s[0, 2] - s[1, 3], s[0, 3] + s[1, 2]) / 4.0
    return SecondMoments(
        n_a=(s[0, 0] + s[1, 1] - 2.0) / 4.0,
        n_b=(s[2, 2] + s[3, 3] - 2.0) / 4.0,
        ab=ab,
        a_dag_b_dag=ab.conjugate(),
    )


# ---------------------------------------------------------------------------
# state files


def record_to_dict(record, modes=ModePair()):
    return {
        "ordering": "xpxp",
        "omega_a": modes.omega_a,
        "omega_b": modes.omega_b,
        "cm": [float(x) for x in np.asarray(record.sigma).ravel()],
        "family": Family(record.family).value,
        "params": record.params,
        "gaussian": bool(record.gaussian),
        "seed": record.seed,
    }


def dump_state(record, path, modes=ModePair()):
    with open(path, "w") as fh:
        json.dump(record_to_dict(record, modes), fh, indent=2, sort_keys=True)
        fh.write("\n")


def record_from_dict(data):
    """Parse a state-file mapping into ``(StateRecord, ModePair)``.

    Modes are relabelled when ``omega_a > omega_b`` so that the returned
    ``ModePair`` is ordered.
    """
    try:
        cm = data["cm"]
    except KeyError:
        raise ValueError("state file lacks the 'cm' field") from None
    sigma = as_covariance(cm, ordering=data.get("ordering", "xpxp"))
    if any(abs(float(x)) > 0 for x in data.get("first_moments") or ()):
        log.warning("first moments are removable by local displacements; ignoring them")
    w_a = float(data.get("omega_a", 1.0))
    w_b = float(data.get("omega_b", 1.0))
    if w_a > w_b:
        log.warning("omega_a > omega_b: relabelling modes A <-> B")
        sigma = swap_modes(sigma)
        w_a, w_b = w_b, w_a
    family = Family(data.get("family", "Raw"))
    gaussian = bool(data.get("gaussian", family in (Family.BLOCH_MESSIAH, Family.TMS)))
    record = StateRecord(sigma, family, gaussian, dict(data.get("params") or {}), data.get("seed"))
    return record, ModePair(w_a, w_b)


def load_state(path):
    with open(path) as fh:
        return record_from_dict(json.load(fh))
