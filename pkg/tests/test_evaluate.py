import json

import pytest

from lowres_sentiment.config import METHODS, SweepConfig, TrainConfig
from lowres_sentiment.corpus import Label
from lowres_sentiment.errors import EmptyInputError, LengthMismatchError
from lowres_sentiment.evaluate import (
    ConfusionMatrix,
    EvalReport,
    SweepReport,
    ThresholdOutcome,
    accuracy,
    confusion_matrix,
    emit_report,
    report_csv,
    run_sweep,
    threshold_check,
)

from conftest import SAMPLE_PREDICTIONS

FAST = TrainConfig(seed=1, mlp_epochs=50)


def test_sample_predictions_accuracy():
    predicted = [p for _, p, _ in SAMPLE_PREDICTIONS]
    gold = [g for _, _, g in SAMPLE_PREDICTIONS]
    assert accuracy(predicted, gold) == 0.75
    cm = confusion_matrix(predicted, gold)
    assert cm == ConfusionMatrix(tp=2, fp=0, tn=1, fn=1)
    assert threshold_check(cm) is ThresholdOutcome.NEED_MORE_TRAINING_DATA


def test_accuracy_edges():
    gold = [Label.POSITIVE, Label.NEGATIVE, Label.NEGATIVE]
    assert accuracy(gold, gold) == 1.0
    flipped = [Label.NEGATIVE if g is Label.POSITIVE else Label.POSITIVE for g in gold]
    assert accuracy(flipped, gold) == 0.0
    with pytest.raises(LengthMismatchError):
        accuracy(gold[:2], gold)
    with pytest.raises(EmptyInputError):
        accuracy([], [])


@pytest.mark.parametrize("acc,outcome", [(0.75, ThresholdOutcome.NEED_MORE_TRAINING_DATA),
                                         (0.80, ThresholdOutcome.PASS), (1.0, ThresholdOutcome.PASS)])
def test_threshold_boundary(acc, outcome):
    cm = ConfusionMatrix(0, 0, 0, 1)
    assert threshold_check(EvalReport("nb", 0.5, acc, cm, 0)) is outcome


def test_single_row_sweep(demo_corpus):
    report = run_sweep(demo_corpus, ["naive_bayes"], SweepConfig(0.5, 0.5, 0.05, seed=3), FAST)
    assert len(report.rows) == 1
    row = report.rows[0]
    assert row.confusion.total == 100
    assert row.accuracy == pytest.approx((row.confusion.tp + row.confusion.tn) / 100)


def test_empty_methods(demo_corpus):
    with pytest.raises(EmptyInputError):
        run_sweep(demo_corpus, [], SweepConfig(), FAST)


def test_parallel_equals_serial(demo_corpus):
    sweep = SweepConfig(0.3, 0.6, 0.15, seed=5)
    serial = run_sweep(demo_corpus, METHODS, sweep, FAST, jobs=1)
    parallel = run_sweep(demo_corpus, METHODS, sweep, FAST, jobs=2)
    assert report_csv(serial) == report_csv(parallel)
    assert [r.method for r in serial.rows] == sorted(METHODS) * 3


def test_emitters(tmp_path, demo_corpus):
    report = run_sweep(demo_corpus, ["naive_bayes", "knn"], SweepConfig(0.4, 0.6, 0.1, seed=5), FAST)
    csv_path = emit_report(report, "csv", tmp_path / "r.csv")
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "train_fraction,method,accuracy,tp,fp,tn,fn,seed"
    assert len(lines) == 1 + 6
    js = json.loads(emit_report(report, "json", tmp_path / "r.json").read_text())
    assert SweepReport.from_dict(js).rows == report.rows
    assert js["fingerprint"] == demo_corpus.fingerprint()
    svg = emit_report(report, "svg-chart-data", tmp_path / "r.svg").read_text()
    assert svg.count("<polyline") == 2
    assert svg.startswith("<svg")


def test_empty_report_not_emitted(tmp_path):
    with pytest.raises(EmptyInputError):
        emit_report(SweepReport((), "0" * 64), "csv", tmp_path / "x.csv")
