"""Uniform train/predict façade over the four classifiers.

A ``SentimentModel`` bundles the preprocessing settings, the TF-IDF model
fitted on the training documents and one trained classifier, so it can be
applied to raw text directly and serialised to a single JSON document.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Union

import numpy as np

from ..config import METHODS, TrainConfig
from ..corpus import Corpus, LabeledDocument
from ..errors import ModelLoadError, UnknownMethodError
from ..preprocess import PreprocessConfig, StopwordList, preprocess_text
from ..vectorize import TfIdfModel, Variant
from .base import Prediction, encode_labels
from .knn import KnnModel, predict_knn_batch, train_knn
from .mlp import MlpModel, predict_mlp_batch, train_mlp
from .naive_bayes import NaiveBayesModel, predict_nb_batch, train_nb
from .tree import TreeModel, from_nodes, predict_dt_batch, to_nodes, train_dt

MODEL_FORMAT_VERSION = 1

__all__ = [
    "METHODS",
    "Prediction",
    "SentimentModel",
    "train",
    "predict",
    "predict_many",
    "load_model",
    "save_model",
]


@dataclass(frozen=True, eq=False)
class SentimentModel:
    method: str
    preprocess: PreprocessConfig
    tfidf: TfIdfModel
    classifier: Union[NaiveBayesModel, KnnModel, TreeModel, MlpModel]
    config: TrainConfig

    def tokens(self, texts: Iterable[str]) -> list[list[str]]:
        return [preprocess_text(t, self.preprocess) for t in texts]

    def features(self, token_lists) -> np.ndarray:
        if self.method == "naive_bayes":
            return self.tfidf.count_matrix(token_lists)
        return self.tfidf.transform_dense(token_lists)

    def predict_tokens(self, token_lists) -> list[Prediction]:
        token_lists = list(token_lists)
        if not token_lists:
            return []
        X = self.features(token_lists)
        return _PREDICTORS[self.method](self.classifier, X)

    def predict_texts(self, texts: Iterable[str]) -> list[Prediction]:
        return self.predict_tokens(self.tokens(texts))

    def to_dict(self) -> dict:
        return {
            "format": "sentiment-model",
            "version": MODEL_FORMAT_VERSION,
            "method": self.method,
            "train_config": dataclasses.asdict(self.config),
            "preprocess": {
                "filter_stopwords": self.preprocess.filter_stopwords,
                "stopwords": sorted(self.preprocess.stopwords.words),
            },
            "tfidf": self.tfidf.to_dict(),
            "classifier": _dump_classifier(self.method, self.classifier),
        }

    @classmethod
    def from_dict(cls, data) -> "SentimentModel":
        try:
            if data.get("format") != "sentiment-model" or data.get("version") != MODEL_FORMAT_VERSION:
                raise ModelLoadError(f"unsupported model format {data.get('format')}/{data.get('version')}")
            method = data["method"]
            if method not in METHODS:
                raise ModelLoadError(f"unknown method {method!r} in model file")
            pre = PreprocessConfig(
                StopwordList.of(data["preprocess"]["stopwords"]),
                bool(data["preprocess"]["filter_stopwords"]),
            )
            return cls(
                method=method,
                preprocess=pre,
                tfidf=TfIdfModel.from_dict(data["tfidf"]),
                classifier=_load_classifier(method, data["classifier"]),
                config=TrainConfig(**data["train_config"]),
            )
        except ModelLoadError:
            raise
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ModelLoadError(f"malformed model file: {exc}") from exc


def _arr(a) -> list:
    return np.asarray(a).tolist()


def _dump_classifier(method: str, model) -> dict:
    if method == "naive_bayes":
        return {"class_count": _arr(model.class_count), "feature_count": _arr(model.feature_count), "alpha": model.alpha}
    if method == "knn":
        return {"X": _arr(model.X), "y": _arr(model.y), "k": model.k, "ordinals": _arr(model.ordinals)}
    if method == "decision_tree":
        return {"nodes": to_nodes(model), "max_depth": model.max_depth, "min_leaf": model.min_leaf}
    return {
        "activation": model.activation,
        "W1": _arr(model.W1),
        "b1": _arr(model.b1),
        "W2": _arr(model.W2),
        "b2": model.b2,
    }


def _load_classifier(method: str, d: dict):
    if method == "naive_bayes":
        return NaiveBayesModel(np.array(d["class_count"], dtype=float), np.array(d["feature_count"], dtype=float), float(d["alpha"]))
    if method == "knn":
        X = np.array(d["X"], dtype=float)
        return train_knn(X, np.array(d["y"], dtype=np.int64), int(d["k"]), np.array(d["ordinals"]))
    if method == "decision_tree":
        return from_nodes(d["nodes"], d["max_depth"], int(d["min_leaf"]))
    W1 = np.array(d["W1"], dtype=float)
    return MlpModel(W1, np.array(d["b1"], dtype=float), np.array(d["W2"], dtype=float), float(d["b2"]), d["activation"])


_PREDICTORS = {
    "naive_bayes": predict_nb_batch,
    "knn": predict_knn_batch,
    "decision_tree": predict_dt_batch,
    "mlp": predict_mlp_batch,
}


def train(
    method: str,
    documents: Corpus | Iterable[LabeledDocument],
    config: TrainConfig | None = None,
    preprocess: PreprocessConfig | None = None,
    variant: Variant | str = Variant.STANDARD,
) -> SentimentModel:
    """Preprocess, fit TF-IDF on ``documents`` only, and train ``method``."""
    if method not in METHODS:
        raise UnknownMethodError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
    config = config or TrainConfig()
    preprocess = preprocess or PreprocessConfig()
    docs = list(documents)
    tokens = [preprocess_text(d.text, preprocess) for d in docs]
    tfidf = TfIdfModel.fit(tokens, variant)
    y = encode_labels(d.label for d in docs)

    if method == "naive_bayes":
        clf = train_nb(tfidf.count_matrix(tokens), y, config.nb_alpha)
    else:
        X = tfidf.transform_dense(tokens)
        if method == "knn":
            clf = train_knn(X, y, config.knn_k)
        elif method == "decision_tree":
            clf = train_dt(X, y, config.dt_max_depth, config.dt_min_leaf)
        else:
            clf = train_mlp(X, y, config.mlp_hidden, config.mlp_learning_rate, config.mlp_epochs, config.seed)
    return SentimentModel(method, preprocess, tfidf, clf, config)


def predict(model: SentimentModel, document: str | LabeledDocument) -> Prediction:
    text = document.text if isinstance(document, LabeledDocument) else document
    return model.predict_texts([text])[0]


def predict_many(model: SentimentModel, documents) -> list[Prediction]:
    texts = [d.text if isinstance(d, LabeledDocument) else d for d in documents]
    return model.predict_texts(texts)


def save_model(model: SentimentModel, path) -> None:
    Path(path).write_text(json.dumps(model.to_dict(), ensure_ascii=False), encoding="utf-8")


def load_model(path) -> SentimentModel:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ModelLoadError(f"cannot read model {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ModelLoadError(f"{path}: expected a JSON object")
    return SentimentModel.from_dict(data)
