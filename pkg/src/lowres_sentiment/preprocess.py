"""Four-stage text preprocessing: punctuation removal, case folding,
whitespace tokenizing and stopword filtering."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

from .corpus import LabeledDocument
from .errors import EmptyStopwordListError, MissingFileError

DEFAULT_STOPWORDS_RESOURCE = "stopwords_id.txt"


@dataclass(frozen=True)
class StopwordList:
    words: frozenset = frozenset()

    def __post_init__(self):
        bad = [w for w in self.words if w != w.lower() or not w or any(c.isspace() for c in w)]
        if bad:
            raise ValueError(f"stopwords must be lowercase single tokens: {sorted(bad)[:5]}")

    @classmethod
    def of(cls, words: Iterable[str]) -> "StopwordList":
        return cls(frozenset(words))

    @classmethod
    def parse(cls, lines: Iterable[str]) -> "StopwordList":
        words = set()
        for line in lines:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            words.add(unicodedata.normalize("NFC", line).lower())
        return cls(frozenset(words))

    @classmethod
    def from_file(cls, path) -> "StopwordList":
        path = Path(path)
        if not path.is_file():
            raise MissingFileError(path)
        with path.open(encoding="utf-8") as fh:
            return cls.parse(fh)

    @classmethod
    def default(cls) -> "StopwordList":
        text = resources.files("lowres_sentiment.data").joinpath(DEFAULT_STOPWORDS_RESOURCE).read_text("utf-8")
        return cls.parse(text.splitlines())

    def __contains__(self, token) -> bool:
        return token in self.words

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class TokenizedDocument:
    id: str
    tokens: tuple


@dataclass(frozen=True)
class PreprocessConfig:
    stopwords: StopwordList = field(default_factory=StopwordList.default)
    filter_stopwords: bool = True


def _is_punct(ch: str) -> bool:
    # Unicode P* (punctuation) and S* (symbols); covers @, #, emoji and currency.
    return unicodedata.category(ch)[0] in "PS"


def remove_punctuation(text: str) -> str:
    """Replace punctuation/symbol characters by spaces and collapse whitespace."""
    text = unicodedata.normalize("NFC", text)
    return " ".join("".join(" " if _is_punct(c) else c for c in text).split())


def case_fold(text: str) -> str:
    return text.lower()


def tokenize(text: str) -> list[str]:
    return text.split()


def filter_stopwords(tokens: Iterable[str], stopwords: StopwordList) -> list[str]:
    if not len(stopwords):
        raise EmptyStopwordListError("stopword filtering enabled with an empty list")
    return [t for t in tokens if t not in stopwords]


def preprocess_text(text: str, config: PreprocessConfig | None = None) -> list[str]:
    config = config or PreprocessConfig()
    tokens = tokenize(case_fold(remove_punctuation(text)))
    if config.filter_stopwords:
        tokens = filter_stopwords(tokens, config.stopwords)
    return tokens


def preprocess(doc: LabeledDocument, config: PreprocessConfig | None = None) -> TokenizedDocument:
    return TokenizedDocument(doc.id, tuple(preprocess_text(doc.text, config)))


def trace_stages(text: str, stopwords: StopwordList) -> list[tuple[str, str]]:
    """(before, after) pairs for each of the four stages, tokens rendered as ``-tok-``."""
    stage1 = remove_punctuation(text)
    stage2 = case_fold(stage1)
    tokens = tokenize(stage2)
    filtered = filter_stopwords(tokens, stopwords)

    def show(ts):
        return " ".join(f"-{t}-" for t in ts)

    return [
        (text, stage1),
        (stage1, stage2),
        (stage2, show(tokens)),
        (show(tokens), show(filtered)),
    ]
