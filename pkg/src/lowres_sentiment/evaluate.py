"""Accuracy evaluation, the 80% adequacy check and train-fraction sweeps."""

from __future__ import annotations

import csv
import enum
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .classifiers import SentimentModel, predict_many, train
from .config import SweepConfig, TrainConfig
from .corpus import Corpus, DataSplit, Label, sweep_splits
from .errors import EmptyInputError, LengthMismatchError, SentimentError
from .preprocess import PreprocessConfig
from .vectorize import Variant

DEFAULT_THRESHOLD = 0.8
CSV_COLUMNS = ("train_fraction", "method", "accuracy", "tp", "fp", "tn", "fn", "seed")


class ThresholdOutcome(str, enum.Enum):
    PASS = "Pass"
    NEED_MORE_TRAINING_DATA = "NeedMoreTrainingData"


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    tn: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    @property
    def accuracy(self) -> float:
        return (self.tp + self.tn) / self.total


@dataclass(frozen=True)
class EvalReport:
    method: str
    train_fraction: float
    accuracy: float
    confusion: ConfusionMatrix
    seed: int
    timing: float = 0.0

    def row(self) -> dict:
        c = self.confusion
        return {
            "train_fraction": self.train_fraction,
            "method": self.method,
            "accuracy": self.accuracy,
            "tp": c.tp,
            "fp": c.fp,
            "tn": c.tn,
            "fn": c.fn,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class SweepReport:
    rows: tuple
    fingerprint: str

    @property
    def methods(self) -> list[str]:
        return sorted({r.method for r in self.rows})

    @property
    def fractions(self) -> list[float]:
        return sorted({r.train_fraction for r in self.rows})

    def accuracy_table(self) -> dict:
        return {(r.train_fraction, r.method): r.accuracy for r in self.rows}

    def best_per_fraction(self) -> list[tuple[float, str, float]]:
        out = []
        for f in self.fractions:
            rows = [r for r in self.rows if r.train_fraction == f]
            best = min(rows, key=lambda r: (-r.accuracy, r.method))
            out.append((f, best.method, best.accuracy))
        return out

    def to_dict(self, include_timing: bool = True) -> dict:
        rows = []
        for r in self.rows:
            row = r.row()
            if include_timing:
                row["timing"] = r.timing
            rows.append(row)
        return {"fingerprint": self.fingerprint, "rows": rows}

    @classmethod
    def from_dict(cls, data: dict) -> "SweepReport":
        rows = tuple(
            EvalReport(
                method=r["method"],
                train_fraction=float(r["train_fraction"]),
                accuracy=float(r["accuracy"]),
                confusion=ConfusionMatrix(int(r["tp"]), int(r["fp"]), int(r["tn"]), int(r["fn"])),
                seed=int(r["seed"]),
                timing=float(r.get("timing", 0.0)),
            )
            for r in data["rows"]
        )
        return cls(rows, data["fingerprint"])


def _check_lengths(predicted: Sequence, gold: Sequence) -> None:
    if len(predicted) != len(gold):
        raise LengthMismatchError(f"{len(predicted)} predictions for {len(gold)} gold labels")
    if not gold:
        raise EmptyInputError("cannot score an empty prediction list")


def _as_label(x) -> Label:
    return x.label if hasattr(x, "label") else Label.parse(x)


def accuracy(predicted: Sequence, gold: Sequence) -> float:
    _check_lengths(predicted, gold)
    hits = sum(_as_label(p) is _as_label(g) for p, g in zip(predicted, gold))
    return hits / len(gold)


def confusion_matrix(predicted: Sequence, gold: Sequence) -> ConfusionMatrix:
    _check_lengths(predicted, gold)
    tp = fp = tn = fn = 0
    for p, g in zip(predicted, gold):
        p, g = _as_label(p), _as_label(g)
        if p is Label.POSITIVE:
            if g is Label.POSITIVE:
                tp += 1
            else:
                fp += 1
        elif g is Label.NEGATIVE:
            tn += 1
        else:
            fn += 1
    return ConfusionMatrix(tp, fp, tn, fn)


def threshold_check(report, threshold: float = DEFAULT_THRESHOLD) -> ThresholdOutcome:
    """Advisory only: flags when more labeled training data is needed."""
    acc = report.accuracy if hasattr(report, "accuracy") else float(report)
    return ThresholdOutcome.PASS if acc >= threshold else ThresholdOutcome.NEED_MORE_TRAINING_DATA


def evaluate(model: SentimentModel, test: Corpus, train_fraction: float = float("nan"), seed: int = 0,
             timing: float = 0.0) -> EvalReport:
    preds = predict_many(model, test)
    cm = confusion_matrix(preds, test.labels)
    return EvalReport(model.method, train_fraction, cm.accuracy, cm, seed, timing)


def run_split(split: DataSplit, method: str, train_config: TrainConfig,
              preprocess: PreprocessConfig | None = None,
              variant: Variant | str = Variant.STANDARD) -> EvalReport:
    t0 = time.perf_counter()
    model = train(method, split.train, train_config, preprocess, variant)
    return evaluate(model, split.test, split.train_fraction, split.seed, time.perf_counter() - t0)


def _run_task(args) -> EvalReport:
    return run_split(*args)


def run_sweep(
    corpus: Corpus,
    methods: Sequence[str],
    sweep: SweepConfig | None = None,
    train_config: TrainConfig | None = None,
    preprocess: PreprocessConfig | None = None,
    variant: Variant | str = Variant.STANDARD,
    jobs: int = 1,
) -> SweepReport:
    """Train and score every method on every split of the sweep.

    TF-IDF is refit on each training partition. Rows are sorted by
    (train_fraction, method), so the result does not depend on ``jobs``.
    """
    if not methods:
        raise EmptyInputError("run_sweep needs at least one method")
    sweep = sweep or SweepConfig()
    train_config = train_config or TrainConfig()
    preprocess = preprocess or PreprocessConfig()
    splits = sweep_splits(corpus, sweep.start, sweep.end, sweep.step, sweep.seed, sweep.stratify)
    tasks = [(s, m, train_config, preprocess, variant) for s in splits for m in methods]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_task, tasks))
    else:
        rows = [_run_task(t) for t in tasks]
    rows.sort(key=lambda r: (r.train_fraction, r.method))
    return SweepReport(tuple(rows), corpus.fingerprint())


def report_csv(report: SweepReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report.rows:
        row = r.row()
        writer.writerow([f"{row['train_fraction']:.2f}", row["method"], repr(row["accuracy"]),
                         row["tp"], row["fp"], row["tn"], row["fn"], row["seed"]])
    return buf.getvalue()


def report_json(report: SweepReport, include_timing: bool = True) -> str:
    return json.dumps(report.to_dict(include_timing), indent=2) + "\n"


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def report_svg(report: SweepReport, width: int = 640, height: int = 400) -> str:
    """Accuracy against training fraction, one polyline per method."""
    left, right, top, bottom = 60, 150, 30, 50
    fractions = report.fractions
    lo, hi = fractions[0], fractions[-1]
    span = (hi - lo) or 1.0
    pw, ph = width - left - right, height - top - bottom

    def xy(f, acc):
        return left + (f - lo) / span * pw, top + (1.0 - acc) * ph

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        "<title>Accuracy Comparison of Classifiers</title>",
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="#444"/>',
    ]
    for tick in (0.0, 0.2, 0.4, 0.6, 0.8, 1.0):
        _, y = xy(lo, tick)
        parts.append(f'<text x="{left - 8}" y="{y + 4:.1f}" font-size="11" text-anchor="end">{tick:.1f}</text>')
    for f in fractions:
        x, _ = xy(f, 0.0)
        parts.append(f'<text x="{x:.1f}" y="{top + ph + 16}" font-size="10" text-anchor="middle">{f:.2f}</text>')
    parts.append(f'<text x="{left + pw / 2:.1f}" y="{height - 10}" font-size="12" text-anchor="middle">training fraction</text>')
    parts.append(f'<text x="16" y="{top + ph / 2:.1f}" font-size="12" text-anchor="middle" '
                 f'transform="rotate(-90 16 {top + ph / 2:.1f})">accuracy</text>')

    table = report.accuracy_table()
    for i, method in enumerate(report.methods):
        color = _PALETTE[i % len(_PALETTE)]
        pts = " ".join("%.2f,%.2f" % xy(f, table[(f, method)]) for f in fractions if (f, method) in table)
        parts.append(f'<polyline data-method="{method}" fill="none" stroke="{color}" stroke-width="2" points="{pts}"/>')
        ly = top + 10 + i * 18
        parts.append(f'<line x1="{left + pw + 12}" y1="{ly}" x2="{left + pw + 32}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        parts.append(f'<text x="{left + pw + 38}" y="{ly + 4}" font-size="11">{method}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


_EMITTERS = {"csv": report_csv, "json": report_json, "svg": report_svg}
_SUFFIX = {"csv": ".csv", "json": ".json", "svg": ".svg"}


def emit_report(report: SweepReport, format: str, path) -> Path:
    if not report.rows:
        raise EmptyInputError("refusing to emit an empty sweep report")
    fmt = "svg" if format in ("svg-chart-data", "chart") else format
    if fmt not in _EMITTERS:
        raise SentimentError(f"unknown report format {format!r}")
    path = Path(path)
    if path.is_dir():
        path = path / f"sweep{_SUFFIX[fmt]}"
    path.write_text(_EMITTERS[fmt](report), encoding="utf-8")
    return path


def mean_accuracy(report: SweepReport, method: str) -> float:
    accs = [r.accuracy for r in report.rows if r.method == method]
    return sum(accs) / len(accs)


def format_summary(report: SweepReport) -> str:
    methods = report.methods
    table = report.accuracy_table()
    lines = ["fraction  " + "  ".join(f"{m:>13}" for m in methods) + "  best"]
    best = dict((f, m) for f, m, _ in report.best_per_fraction())
    for f in report.fractions:
        cells = "  ".join(f"{table[(f, m)]:>13.3f}" for m in methods)
        lines.append(f"{f:>8.2f}  {cells}  {best[f]}")
    lines.append("mean      " + "  ".join(f"{mean_accuracy(report, m):>13.3f}" for m in methods))
    return "\n".join(lines)


__all__ = [
    "ConfusionMatrix",
    "EvalReport",
    "SweepReport",
    "ThresholdOutcome",
    "accuracy",
    "confusion_matrix",
    "emit_report",
    "evaluate",
    "run_sweep",
    "threshold_check",
]
