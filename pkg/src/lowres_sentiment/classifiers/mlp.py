"""One-hidden-layer perceptron: sigmoid hidden units, sigmoid output,
mean binary cross-entropy, full-batch gradient descent."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import NonFiniteLossError
from .base import POSITIVE, Prediction, as_matrix

PARAM_NAMES = ("W1", "b1", "W2", "b2")


def sigmoid(z):
    z = np.asarray(z, dtype=float)
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def softplus(z):
    return np.logaddexp(0.0, z)


@dataclass(frozen=True, eq=False)
class MlpModel:
    W1: np.ndarray  # (n_features, hidden)
    b1: np.ndarray  # (hidden,)
    W2: np.ndarray  # (hidden,)
    b2: float
    activation: str = "sigmoid"
    loss_history: tuple = field(default=(), repr=False)

    @property
    def params(self) -> dict:
        return {"W1": self.W1, "b1": self.b1, "W2": self.W2, "b2": np.asarray(self.b2)}

    def forward(self, X) -> np.ndarray:
        return sigmoid(logits(self.params, as_matrix(X)))


def init_params(n_features: int, hidden: int, seed: int) -> dict:
    """Uniform(-0.5, 0.5) initialisation from a PCG64 stream seeded by ``seed``."""
    rng = np.random.default_rng(seed)
    return {
        "W1": rng.uniform(-0.5, 0.5, size=(n_features, hidden)),
        "b1": rng.uniform(-0.5, 0.5, size=hidden),
        "W2": rng.uniform(-0.5, 0.5, size=hidden),
        "b2": np.asarray(rng.uniform(-0.5, 0.5)),
    }


def logits(params: dict, X: np.ndarray) -> np.ndarray:
    H = sigmoid(X @ params["W1"] + params["b1"])
    return H @ params["W2"] + params["b2"]


def loss(params: dict, X: np.ndarray, y: np.ndarray) -> float:
    # BCE written on logits: log(1+e^z) - y z, exact and overflow-free.
    z = logits(params, X)
    return float(np.mean(softplus(z) - y * z))


def loss_and_gradients(params: dict, X: np.ndarray, y: np.ndarray) -> tuple[float, dict]:
    n = X.shape[0]
    A1 = X @ params["W1"] + params["b1"]
    H = sigmoid(A1)
    z = H @ params["W2"] + params["b2"]
    value = float(np.mean(softplus(z) - y * z))

    dz = (sigmoid(z) - y) / n
    dW2 = H.T @ dz
    db2 = np.asarray(dz.sum())
    dA1 = np.outer(dz, params["W2"]) * H * (1.0 - H)
    dW1 = X.T @ dA1
    db1 = dA1.sum(axis=0)
    return value, {"W1": dW1, "b1": db1, "W2": dW2, "b2": db2}


def train_mlp(X, y, hidden: int = 16, learning_rate: float = 0.05, epochs: int = 200, seed: int = 0) -> MlpModel:
    X = as_matrix(X)
    y = np.asarray(y, dtype=float)
    params = init_params(X.shape[1], hidden, seed)
    history = []
    with np.errstate(over="ignore", invalid="ignore"):
        final = _descend(params, X, y, learning_rate, epochs, history)
    history.append(final)
    return MlpModel(params["W1"], params["b1"], params["W2"], float(params["b2"]), loss_history=tuple(history))


def _descend(params, X, y, learning_rate, epochs, history) -> float:
    # Non-finite values are checked explicitly, hence the silenced warnings.
    for _ in range(epochs):
        value, grads = loss_and_gradients(params, X, y)
        if not np.isfinite(value) or not all(np.all(np.isfinite(g)) for g in grads.values()):
            raise NonFiniteLossError(f"training diverged at epoch {len(history)} (loss={value})")
        history.append(value)
        for name in PARAM_NAMES:
            params[name] = params[name] - learning_rate * grads[name]
    final = loss(params, X, y)
    if not np.isfinite(final):
        raise NonFiniteLossError(f"training diverged after epoch {epochs} (loss={final})")
    return final


def predict_mlp(model: MlpModel, x) -> Prediction:
    return predict_mlp_batch(model, x)[0]


def predict_mlp_batch(model: MlpModel, X) -> list[Prediction]:
    out = model.forward(X)
    return [Prediction.from_index(POSITIVE if p >= 0.5 else 0, p) for p in out]
