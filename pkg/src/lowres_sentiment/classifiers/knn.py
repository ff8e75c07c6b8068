"""k-nearest-neighbour voting under cosine similarity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import KTooLargeError
from .base import POSITIVE, Prediction, as_matrix


@dataclass(frozen=True, eq=False)
class KnnModel:
    X: np.ndarray
    y: np.ndarray
    k: int
    # Tie-break key for equal similarities: lower ordinal ranks first.
    ordinals: np.ndarray


def train_knn(X, y, k: int = 5, ordinals=None) -> KnnModel:
    X = as_matrix(X).copy()
    y = np.asarray(y, dtype=np.int64).copy()
    if k < 1 or k > len(y):
        raise KTooLargeError(f"k={k} but only {len(y)} training documents")
    ordinals = np.arange(len(y)) if ordinals is None else np.asarray(ordinals).copy()
    for a in (X, y, ordinals):
        a.setflags(write=False)
    return KnnModel(X, y, int(k), ordinals)


def cosine_similarities(model: KnnModel, x) -> np.ndarray:
    x = np.asarray(x, dtype=float).ravel()
    norms = np.linalg.norm(model.X, axis=1)
    qnorm = np.linalg.norm(x)
    dots = model.X @ x
    denom = norms * qnorm
    out = np.zeros(len(norms))
    ok = denom > 0
    out[ok] = dots[ok] / denom[ok]
    return out


def neighbours(model: KnnModel, x) -> np.ndarray:
    """Indices of the k nearest training rows, nearest first."""
    sims = cosine_similarities(model, x)
    order = np.lexsort((model.ordinals, -sims))
    return order[: model.k]


def predict_knn(model: KnnModel, x) -> Prediction:
    nn = neighbours(model, x)
    votes = model.y[nn]
    pos = int((votes == POSITIVE).sum())
    neg = len(votes) - pos
    if pos != neg:
        winner = POSITIVE if pos > neg else 0
    else:
        winner = int(votes[0])
    return Prediction.from_index(winner, pos / len(votes))


def predict_knn_batch(model: KnnModel, X) -> list[Prediction]:
    return [predict_knn(model, row) for row in as_matrix(X)]
