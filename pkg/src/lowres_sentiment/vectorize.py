"""Vocabulary, term statistics and TF-IDF weighting.

Two weighting variants are supported:

``paper``
    tf(t, d) = count(t, d) / cf(t) and idf(t) = log10(N / cf(t)), where cf is
    the total number of occurrences of t in the fitted corpus. Terms that occur
    more often than there are documents get a negative idf.
``standard``
    tf(t, d) = count(t, d) and idf(t) = log10(N / df(t)).
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import EmptyCorpusError, ModelLoadError, UnknownTermError

FORMAT_VERSION = 1


class Variant(str, enum.Enum):
    PAPER = "paper"
    STANDARD = "standard"


@dataclass(frozen=True)
class Vocabulary:
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "_index", {t: i for i, t in enumerate(self.terms)})
        if len(self._index) != len(self.terms):
            raise ValueError("vocabulary terms must be distinct")

    def index(self, term: str) -> int:
        try:
            return self._index[term]
        except KeyError:
            raise UnknownTermError(term) from None

    def get(self, term: str, default=None):
        return self._index.get(term, default)

    def __contains__(self, term) -> bool:
        return term in self._index

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True, eq=False)
class TermStats:
    doc_count: int
    df: np.ndarray
    cf: np.ndarray


@dataclass(frozen=True)
class DocumentVector:
    """Sparse weights keyed by vocabulary column; zeros are never stored."""

    weights: dict = field(default_factory=dict)
    oov_count: int = 0

    def to_dense(self, size: int) -> np.ndarray:
        out = np.zeros(size)
        for i, w in self.weights.items():
            out[i] = w
        return out


def _tokens_of(doc) -> Sequence[str]:
    return doc.tokens if hasattr(doc, "tokens") else doc


@dataclass(frozen=True, eq=False)
class TfIdfModel:
    vocabulary: Vocabulary
    stats: TermStats
    variant: Variant = Variant.PAPER

    @classmethod
    def fit(cls, documents: Iterable, variant: Variant | str = Variant.PAPER) -> "TfIdfModel":
        """Fit on tokenized documents (``TokenizedDocument`` or token lists)."""
        docs = [list(_tokens_of(d)) for d in documents]
        if not docs:
            raise EmptyCorpusError("cannot fit TF-IDF on an empty corpus")
        cf_counter: Counter = Counter()
        df_counter: Counter = Counter()
        for tokens in docs:
            cf_counter.update(tokens)
            df_counter.update(set(tokens))
        vocab = Vocabulary(tuple(sorted(cf_counter)))
        stats = TermStats(
            doc_count=len(docs),
            df=np.array([df_counter[t] for t in vocab.terms], dtype=np.int64),
            cf=np.array([cf_counter[t] for t in vocab.terms], dtype=np.int64),
        )
        return cls(vocab, stats, Variant(variant))

    def idf(self, term: str) -> float:
        i = self.vocabulary.index(term)
        return float(self._idf_vector()[i])

    def tf(self, term: str, document) -> float:
        i = self.vocabulary.index(term)
        raw = Counter(_tokens_of(document))[term]
        if self.variant is Variant.PAPER:
            return raw / float(self.stats.cf[i])
        return float(raw)

    def weight(self, term: str, document) -> float:
        return self.tf(term, document) * self.idf(term)

    def _idf_vector(self) -> np.ndarray:
        cached = self.__dict__.get("_idf_cache")
        if cached is None:
            denom = self.stats.cf if self.variant is Variant.PAPER else self.stats.df
            cached = np.log10(self.stats.doc_count / denom.astype(float))
            cached.setflags(write=False)
            object.__setattr__(self, "_idf_cache", cached)
        return cached

    @property
    def idf_vector(self) -> np.ndarray:
        return self._idf_vector()

    def counts(self, document) -> tuple[dict, int]:
        """Raw in-vocabulary term counts keyed by column, plus the OOV token count."""
        counts: dict = {}
        oov = 0
        for tok in _tokens_of(document):
            i = self.vocabulary.get(tok)
            if i is None:
                oov += 1
            else:
                counts[i] = counts.get(i, 0) + 1
        return counts, oov

    def transform(self, document) -> DocumentVector:
        counts, oov = self.counts(document)
        idf = self._idf_vector()
        weights = {}
        for i in sorted(counts):
            tf = counts[i] / float(self.stats.cf[i]) if self.variant is Variant.PAPER else float(counts[i])
            w = tf * float(idf[i])
            if w != 0.0:
                weights[i] = w
        return DocumentVector(weights, oov)

    def transform_dense(self, documents: Iterable) -> np.ndarray:
        rows = [self.transform(d) for d in documents]
        X = np.zeros((len(rows), len(self.vocabulary)))
        for r, vec in enumerate(rows):
            for i, w in vec.weights.items():
                X[r, i] = w
        return X

    def count_matrix(self, documents: Iterable) -> np.ndarray:
        rows = [self.counts(d)[0] for d in documents]
        X = np.zeros((len(rows), len(self.vocabulary)))
        for r, counts in enumerate(rows):
            for i, c in counts.items():
                X[r, i] = c
        return X

    def to_dict(self) -> dict:
        return {
            "format": "tfidf",
            "version": FORMAT_VERSION,
            "variant": self.variant.value,
            "doc_count": int(self.stats.doc_count),
            "vocabulary": list(self.vocabulary.terms),
            "df": [int(x) for x in self.stats.df],
            "cf": [int(x) for x in self.stats.cf],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "TfIdfModel":
        try:
            if data["format"] != "tfidf" or data["version"] != FORMAT_VERSION:
                raise ModelLoadError(f"unsupported tfidf dump {data.get('format')}/{data.get('version')}")
            vocab = Vocabulary(tuple(data["vocabulary"]))
            df = np.array(data["df"], dtype=np.int64)
            cf = np.array(data["cf"], dtype=np.int64)
            if not (len(df) == len(cf) == len(vocab)):
                raise ModelLoadError("tfidf dump arrays disagree in length")
            return cls(vocab, TermStats(int(data["doc_count"]), df, cf), Variant(data["variant"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ModelLoadError(f"bad tfidf dump: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def loads(cls, text: str) -> "TfIdfModel":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ModelLoadError(str(exc)) from exc


def fit(documents: Iterable, variant: Variant | str = Variant.PAPER) -> TfIdfModel:
    return TfIdfModel.fit(documents, variant)

