import numpy as np
import pytest

from lowres_sentiment.classifiers.mlp import (
    PARAM_NAMES,
    init_params,
    loss,
    loss_and_gradients,
    predict_mlp_batch,
    sigmoid,
    train_mlp,
)
from lowres_sentiment.corpus import Label
from lowres_sentiment.errors import NonFiniteLossError


def finite_difference_check(X, y, hidden=4, seed=0, eps=1e-5):
    params = init_params(X.shape[1], hidden, seed)
    _, grads = loss_and_gradients(params, X, y)
    worst = 0.0
    for name in PARAM_NAMES:
        p = params[name]
        it = np.nditer(p, flags=["multi_index"])
        for _ in it:
            idx = it.multi_index
            orig = p[idx].copy()
            p[idx] = orig + eps
            up = loss(params, X, y)
            p[idx] = orig - eps
            down = loss(params, X, y)
            p[idx] = orig
            numeric = (up - down) / (2 * eps)
            analytic = grads[name][idx]
            denom = max(abs(numeric), abs(analytic), 1e-8)
            worst = max(worst, abs(numeric - analytic) / denom)
    return worst


def test_gradient_check_random_toy():
    rng = np.random.default_rng(11)
    X = rng.random((5, 6)) * (rng.random((5, 6)) < 0.7) + np.eye(5, 6)
    y = np.array([1, 0, 1, 1, 0], dtype=float)
    assert finite_difference_check(X, y) <= 1e-4


def test_sigmoid_stable():
    z = np.array([-1000.0, -1.0, 0.0, 1.0, 1000.0])
    s = sigmoid(z)
    assert np.all(np.isfinite(s))
    assert s[2] == 0.5 and s[0] == 0.0 and s[-1] == 1.0
    assert np.allclose(s + sigmoid(-z), 1.0)


def test_separable_toy_reaches_full_accuracy():
    X = np.array([[1.0, 0.0], [0.9, 0.1], [0.8, 0.0], [0.0, 1.0], [0.1, 0.9], [0.0, 0.8]])
    y = np.array([1, 1, 1, 0, 0, 0])
    model = train_mlp(X, y, hidden=4, learning_rate=1.0, epochs=200, seed=0)
    preds = predict_mlp_batch(model, X)
    assert [p.label is Label.POSITIVE for p in preds] == [True] * 3 + [False] * 3


def test_deterministic_weights():
    rng = np.random.default_rng(5)
    X, y = rng.random((8, 4)), rng.integers(0, 2, 8)
    a = train_mlp(X, y, hidden=3, epochs=20, seed=9)
    b = train_mlp(X, y, hidden=3, epochs=20, seed=9)
    assert a.W1.tobytes() == b.W1.tobytes() and a.W2.tobytes() == b.W2.tobytes()
    assert a.b1.tobytes() == b.b1.tobytes() and a.b2 == b.b2


def test_init_range():
    p = init_params(50, 16, 3)
    for name in PARAM_NAMES:
        assert np.all(np.abs(p[name]) <= 0.5)


def test_divergence_guard():
    X = np.array([[np.inf, 0.0], [0.0, 1.0]])
    with pytest.raises(NonFiniteLossError):
        train_mlp(X, np.array([1, 0]), hidden=2, epochs=3)


def test_label_score_consistency():
    rng = np.random.default_rng(2)
    X, y = rng.random((10, 3)), rng.integers(0, 2, 10)
    model = train_mlp(X, y, hidden=3, epochs=10)
    for p in predict_mlp_batch(model, rng.random((20, 3))):
        assert (p.label is Label.POSITIVE) == (p.score >= 0.5)
        assert 0.0 <= p.score <= 1.0
