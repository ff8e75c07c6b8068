"""Labeled corpus ingestion and seeded train/test splitting."""

from __future__ import annotations

import csv
import enum
import hashlib
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    CorpusTooSmallError,
    DuplicateIdError,
    EmptySweepError,
    FractionOutOfRangeError,
    MalformedRowError,
    MissingFileError,
    UnknownLabelError,
)

SWEEP_TOLERANCE = 1e-9


class Label(str, enum.Enum):
    # Declared in lexicographic order of the tag: NEGATIVE sorts first.
    NEGATIVE = "negative"
    POSITIVE = "positive"

    @classmethod
    def parse(cls, value) -> "Label":
        if isinstance(value, Label):
            return value
        key = str(value).strip().lower()
        for label in cls:
            if label.value == key:
                return label
        raise UnknownLabelError(value)

    @property
    def display(self) -> str:
        return self.value.capitalize()

    def __str__(self) -> str:
        return self.display


@dataclass(frozen=True)
class LabeledDocument:
    id: str
    text: str
    label: Label


class Corpus(Sequence[LabeledDocument]):
    """Immutable, ordered collection of labeled documents with unique ids."""

    def __init__(self, documents: Iterable[LabeledDocument] = ()):
        docs = tuple(documents)
        seen = set()
        for doc in docs:
            if doc.id in seen:
                raise DuplicateIdError(doc.id)
            seen.add(doc.id)
        self._docs = docs

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Corpus(self._docs[index])
        return self._docs[index]

    def __len__(self) -> int:
        return len(self._docs)

    def __iter__(self) -> Iterator[LabeledDocument]:
        return iter(self._docs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Corpus) and self._docs == other._docs

    def __hash__(self) -> int:
        return hash(self._docs)

    def __repr__(self) -> str:
        return f"Corpus({len(self)} documents)"

    @property
    def documents(self) -> tuple[LabeledDocument, ...]:
        return self._docs

    @property
    def ids(self) -> list[str]:
        return [d.id for d in self._docs]

    @property
    def labels(self) -> list[Label]:
        return [d.label for d in self._docs]

    def label_counts(self) -> dict[Label, int]:
        counts = {label: 0 for label in Label}
        for doc in self._docs:
            counts[doc.label] += 1
        return counts

    def fingerprint(self) -> str:
        """Lowercase hex SHA-256 of the canonical JSONL form of the corpus."""
        h = hashlib.sha256()
        for doc in self._docs:
            line = json.dumps(
                {"id": doc.id, "text": doc.text, "label": doc.label.value},
                ensure_ascii=False,
                sort_keys=True,
            )
            h.update(line.encode("utf-8"))
            h.update(b"\n")
        return h.hexdigest()


@dataclass(frozen=True)
class DataSplit:
    train: Corpus
    test: Corpus
    train_fraction: float
    seed: int


def _make_document(raw: dict, line: int) -> LabeledDocument:
    try:
        doc_id, text, label = raw["id"], raw["text"], raw["label"]
    except (KeyError, TypeError):
        raise MalformedRowError(line, "expected fields id, text, label") from None
    if doc_id is None or str(doc_id).strip() == "":
        raise MalformedRowError(line, "empty id")
    if text is None or str(text).strip() == "":
        raise MalformedRowError(line, "empty text")
    return LabeledDocument(str(doc_id), str(text), Label.parse(label))


def _read_csv(path: Path) -> list[LabeledDocument]:
    docs = []
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise MalformedRowError(1, "empty corpus file")
        header = [h.strip().lower() for h in header]
        if not {"id", "text", "label"} <= set(header):
            raise MalformedRowError(1, f"header must contain id,text,label, got {header}")
        for row in reader:
            line = reader.line_num
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise MalformedRowError(line, f"expected {len(header)} fields, got {len(row)}")
            docs.append(_make_document(dict(zip(header, row)), line))
    return docs


def _read_jsonl(path: Path) -> list[LabeledDocument]:
    docs = []
    with path.open(encoding="utf-8") as fh:
        for line, raw in enumerate(fh, start=1):
            if not raw.strip():
                continue
            try:
                obj = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise MalformedRowError(line, str(exc)) from None
            if not isinstance(obj, dict):
                raise MalformedRowError(line, "expected a JSON object")
            docs.append(_make_document(obj, line))
    return docs


def load_corpus(path, format: str | None = None) -> Corpus:
    """Read a ``csv`` or ``jsonl`` corpus file, preserving file order.

    The format is inferred from the extension when not given.
    """
    path = Path(path)
    if not path.is_file():
        raise MissingFileError(path)
    fmt = (format or path.suffix.lstrip(".")).lower()
    if fmt == "csv":
        docs = _read_csv(path)
    elif fmt in ("jsonl", "json"):
        docs = _read_jsonl(path)
    else:
        raise MalformedRowError(0, f"unsupported corpus format {fmt!r}")
    if not docs:
        raise MalformedRowError(1, "empty corpus")
    return Corpus(docs)


def write_corpus(corpus: Corpus, path, format: str = "csv") -> None:
    path = Path(path)
    if format == "csv":
        with path.open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["id", "text", "label"])
            for d in corpus:
                writer.writerow([d.id, d.text, d.label.value])
    else:
        with path.open("w", encoding="utf-8") as fh:
            for d in corpus:
                fh.write(json.dumps({"id": d.id, "text": d.text, "label": d.label.value}, ensure_ascii=False))
                fh.write("\n")


def _round_half_up(fraction: float, n: int) -> int:
    # Decimal of repr() avoids 0.55 * 200 = 110.00000000000001 style drift.
    exact = Decimal(repr(float(fraction))) * n
    return int(exact.quantize(Decimal(1), rounding=ROUND_HALF_UP))


def train_size(n: int, train_fraction: float) -> int:
    """round-half-up(f * n), clamped so both partitions are non-empty."""
    return min(max(_round_half_up(train_fraction, n), 1), n - 1)


def _check_fraction(f: float) -> None:
    if not (0.0 < f < 1.0):
        raise FractionOutOfRangeError(f"train fraction must lie in (0, 1), got {f}")


def split(corpus: Corpus, train_fraction: float, seed: int, stratify: bool = False) -> DataSplit:
    """Seeded random partition of ``corpus`` into train and test.

    Randomness comes from numpy's PCG64 generator (``np.random.default_rng``).
    With ``stratify`` the permutation is drawn per label and each class
    contributes ``round(f * n_class)`` documents to train.
    """
    _check_fraction(train_fraction)
    n = len(corpus)
    if n < 2:
        raise CorpusTooSmallError(f"need at least 2 documents to split, got {n}")
    rng = np.random.default_rng(seed)

    if not stratify:
        order = rng.permutation(n)
        k = train_size(n, train_fraction)
        train_idx, test_idx = order[:k], order[k:]
    else:
        train_idx, test_idx = [], []
        for label in Label:
            members = np.array([i for i, d in enumerate(corpus) if d.label == label], dtype=int)
            if len(members) == 0:
                continue
            perm = members[rng.permutation(len(members))]
            k = _round_half_up(train_fraction, len(members))
            train_idx.extend(perm[:k])
            test_idx.extend(perm[k:])
        if not train_idx or not test_idx:
            raise CorpusTooSmallError("stratified split left an empty partition")
        train_idx, test_idx = np.sort(train_idx), np.sort(test_idx)

    docs = corpus.documents
    return DataSplit(
        train=Corpus(docs[i] for i in train_idx),
        test=Corpus(docs[i] for i in test_idx),
        train_fraction=float(train_fraction),
        seed=int(seed),
    )


def sweep_fractions(start: float, end: float, step: float) -> list[float]:
    if step <= 0:
        raise FractionOutOfRangeError(f"sweep step must be positive, got {step}")
    if start > end + SWEEP_TOLERANCE:
        raise EmptySweepError(f"sweep start {start} exceeds end {end}")
    fractions = []
    i = 0
    while True:
        f = start + i * step
        if f > end + SWEEP_TOLERANCE:
            break
        fractions.append(round(f, 10))
        i += 1
    if not fractions:
        raise EmptySweepError("sweep produced no fractions")
    for f in fractions:
        _check_fraction(f)
    return fractions


def split_seed(seed: int, index: int) -> int:
    return int(seed) ^ int(index)


def sweep_splits(corpus: Corpus, start: float, end: float, step: float, seed: int,
                 stratify: bool = False) -> list[DataSplit]:
    """One split per fraction in ``start, start+step, ..., end``; split i uses seed ^ i."""
    return [
        split(corpus, f, split_seed(seed, i), stratify=stratify)
        for i, f in enumerate(sweep_fractions(start, end, step))
    ]
