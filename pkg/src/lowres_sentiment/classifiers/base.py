from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..corpus import Label
from ..errors import MissingClassError

NEGATIVE, POSITIVE = 0, 1


@dataclass(frozen=True)
class Prediction:
    label: Label
    score: float  # confidence for Positive

    @classmethod
    def from_index(cls, index: int, score: float) -> "Prediction":
        return cls(Label.POSITIVE if index == POSITIVE else Label.NEGATIVE, float(score))


def encode_labels(labels) -> np.ndarray:
    """Labels (``Label`` or strings) to 0/1 with Positive = 1."""
    return np.array([POSITIVE if Label.parse(l) is Label.POSITIVE else NEGATIVE for l in labels], dtype=np.int64)


def require_both_classes(y: np.ndarray) -> None:
    present = set(np.unique(y).tolist())
    missing = {NEGATIVE, POSITIVE} - present
    if missing:
        names = sorted("Positive" if m == POSITIVE else "Negative" for m in missing)
        raise MissingClassError(f"training data has no {', '.join(names)} documents")


def as_matrix(X) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[None, :]
    return X
