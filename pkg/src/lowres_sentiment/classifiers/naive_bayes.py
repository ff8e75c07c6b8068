"""Multinomial Naive Bayes over raw term counts with additive smoothing."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .base import POSITIVE, Prediction, as_matrix, require_both_classes


@dataclass(frozen=True, eq=False)
class NaiveBayesModel:
    # Row 0 is Negative, row 1 Positive.
    class_count: np.ndarray
    feature_count: np.ndarray
    alpha: float

    @property
    def prior(self) -> np.ndarray:
        return self.class_count / self.class_count.sum()

    @property
    def likelihood(self) -> np.ndarray:
        """P(term | class); each row sums to 1 over the vocabulary."""
        smoothed = self.feature_count + self.alpha
        return smoothed / smoothed.sum(axis=1, keepdims=True)

    @property
    def log_prior(self) -> np.ndarray:
        return np.log(self.prior)

    @property
    def log_likelihood(self) -> np.ndarray:
        with np.errstate(divide="ignore"):
            return np.log(self.likelihood)

    def joint_log_likelihood(self, X) -> np.ndarray:
        X = as_matrix(X)
        ll = self.log_likelihood
        # 0 * log(0) must contribute 0, not nan, when alpha == 0.
        safe = np.where(np.isneginf(ll), 0.0, ll)
        jll = X @ safe.T
        impossible = (X > 0) @ np.isneginf(ll).T.astype(float) > 0
        jll = np.where(impossible, -np.inf, jll)
        return jll + self.log_prior

    def posterior(self, X) -> np.ndarray:
        jll = self.joint_log_likelihood(X)
        top = jll.max(axis=1, keepdims=True)
        # Every class impossible: fall back to the priors.
        dead = np.isneginf(top[:, 0])
        if dead.any():
            jll[dead] = self.log_prior
            top[dead] = self.log_prior.max()
        p = np.exp(jll - top)
        return p / p.sum(axis=1, keepdims=True)


def train_nb(X_counts, y, alpha: float = 1.0) -> NaiveBayesModel:
    X = as_matrix(X_counts)
    y = np.asarray(y, dtype=np.int64)
    require_both_classes(y)
    class_count = np.array([(y == c).sum() for c in (0, 1)], dtype=float)
    feature_count = np.vstack([X[y == c].sum(axis=0) for c in (0, 1)])
    return NaiveBayesModel(class_count, feature_count, float(alpha))


def predict_nb(model: NaiveBayesModel, x_counts) -> Prediction:
    return predict_nb_batch(model, as_matrix(x_counts))[0]


def predict_nb_batch(model: NaiveBayesModel, X_counts) -> list[Prediction]:
    post = model.posterior(X_counts)
    return [Prediction.from_index(POSITIVE if p[1] >= p[0] else 0, p[1]) for p in post]
