import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from cvergo.energetics import ModePair, ergotropy_report
from cvergo.estimators import FEATURE_NAMES, ErgotropyFeatures, REGWitness, check_covariances
from cvergo.states import random_ensemble, tms
from cvergo.witnesses import classify


@pytest.fixture
def X():
    states = [r.sigma for r in random_ensemble(20, 2.5, 0.5, seed=2)]
    states.append(tms(1.0, 0.5))
    return np.stack(states)


def test_check_covariances(X):
    assert check_covariances(X).shape == (21, 16)
    assert check_covariances(X.reshape(21, 16)).shape == (21, 16)
    with pytest.raises(ValueError):
        check_covariances(np.zeros((3, 9)))


def test_params_and_clone():
    est = ErgotropyFeatures(omega_a=1.0, omega_b=2.0)
    assert est.get_params() == {"omega_a": 1.0, "omega_b": 2.0}
    c = clone(est).set_params(omega_b=5.0)
    assert c.omega_b == 5.0 and est.omega_b == 2.0
    assert REGWitness(omega_b=3.0).get_params()["omega_b"] == 3.0


def test_transform_matches_report(X):
    est = ErgotropyFeatures(1.0, 3.0).fit(X)
    out = est.transform(X)
    assert out.shape == (21, len(FEATURE_NAMES))
    rep = ergotropy_report(X[0], ModePair(1.0, 3.0))
    assert out[0, 3] == pytest.approx(rep.gap)
    assert out[0, 4] == pytest.approx(rep.reg)
    # pure TMS has no finite REG
    assert np.isinf(out[-1, 4])
    assert list(est.get_feature_names_out()) == list(FEATURE_NAMES)


def test_not_fitted(X):
    with pytest.raises(NotFittedError):
        ErgotropyFeatures().transform(X)
    with pytest.raises(NotFittedError):
        REGWitness().predict(X)


def test_witness_predict(X):
    clf = REGWitness(1.0, 10.0).fit(X)
    pred = clf.predict(X)
    want = [classify(s, ModePair(1.0, 10.0)).verdict.value for s in X]
    assert list(pred) == want
    assert set(pred) <= set(clf.classes_)


def test_pipeline(X):
    from sklearn.preprocessing import StandardScaler

    pipe = make_pipeline(ErgotropyFeatures(), StandardScaler())
    out = pipe.fit_transform(X[:-1])
    assert out.shape == (20, len(FEATURE_NAMES))


def test_invalid_modes(X):
    with pytest.raises(ValueError):
        ErgotropyFeatures(omega_a=2.0, omega_b=1.0).fit(X)
