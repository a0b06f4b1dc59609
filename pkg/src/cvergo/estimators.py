"""scikit-learn wrappers: covariance matrices in, energetic features / verdicts out.

Each sample is one two-mode covariance matrix flattened row-major to 16
columns (xpxp ordering), so the estimators slot into ``Pipeline`` and
``cross_val_score`` like any other.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .correlations import mutual_information
from .energetics import ModePair, ergotropy_report
from .witnesses import Verdict, classify, ppt_value

FEATURE_NAMES = (
    "mean_energy",
    "e_local_passive",
    "e_global_passive",
    "gap",
    "reg",
    "qmi",
    "ppt_value",
)


def check_covariances(X):
    """Validate ``X`` as an ``(n_samples, 16)`` array; 3-D ``(n, 4, 4)`` input is flattened."""
    X = np.asarray(X, dtype=float)
    if X.ndim == 3 and X.shape[1:] == (4, 4):
        X = X.reshape(len(X), 16)
    X = check_array(X, dtype=float)
    if X.shape[1] != 16:
        raise ValueError(f"expected 16 columns (flattened 4x4 CM), got {X.shape[1]}")
    return X


class ErgotropyFeatures(TransformerMixin, BaseEstimator):
    """Map covariance matrices to energetic and entropic features.

    Parameters
    ----------
    omega_a, omega_b : float
        Mode frequencies, ``omega_a <= omega_b``.

    Globally pure correlated states have no finite REG; that column is ``inf``
    for them.
    """

    def __init__(self, omega_a=1.0, omega_b=1.0):
        self.omega_a = omega_a
        self.omega_b = omega_b

    def fit(self, X, y=None):
        check_covariances(X)
        self.modes_ = ModePair(self.omega_a, self.omega_b)
        self.n_features_in_ = 16
        return self

    def transform(self, X):
        check_is_fitted(self, "modes_")
        X = check_covariances(X)
        out = np.empty((len(X), len(FEATURE_NAMES)))
        for i, row in enumerate(X):
            sigma = row.reshape(4, 4)
            rep = ergotropy_report(sigma, self.modes_)
            reg = np.inf if rep.reg is None else rep.reg
            out[i] = (
                rep.mean_energy, rep.e_local_passive, rep.e_global_passive,
                rep.gap, reg, mutual_information(sigma), ppt_value(sigma),
            )
        return out

    def get_feature_names_out(self, input_features=None):
        return np.array(FEATURE_NAMES, dtype=object)


class REGWitness(ClassifierMixin, BaseEstimator):
    """Three-way entanglement classifier from the relative ergotropic gap.

    Nothing is learned: ``fit`` only validates input and records the label
    set.  ``predict`` returns the verdict strings of :class:`Verdict`.
    """

    def __init__(self, omega_a=1.0, omega_b=1.0):
        self.omega_a = omega_a
        self.omega_b = omega_b

    def fit(self, X, y=None):
        check_covariances(X)
        self.modes_ = ModePair(self.omega_a, self.omega_b)
        self.classes_ = np.array([v.value for v in Verdict], dtype=object)
        self.n_features_in_ = 16
        return self

    def predict(self, X):
        check_is_fitted(self, "modes_")
        X = check_covariances(X)
        return np.array(
            [classify(row.reshape(4, 4), self.modes_).verdict.value for row in X], dtype=object
        )
