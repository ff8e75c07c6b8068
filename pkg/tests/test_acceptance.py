"""Exit criteria. Each test records one PASS/FAIL line, printed in the
terminal summary (see conftest.pytest_terminal_summary)."""

import csv
import json
import time
from fractions import Fraction

import numpy as np
import pytest

from lowres_sentiment.classifiers import METHODS, load_model, predict_many, save_model, train
from lowres_sentiment.classifiers.knn import predict_knn, train_knn
from lowres_sentiment.classifiers.mlp import PARAM_NAMES, init_params, loss, loss_and_gradients
from lowres_sentiment.classifiers.naive_bayes import predict_nb, train_nb
from lowres_sentiment.classifiers.tree import train_dt
from lowres_sentiment.cli import main
from lowres_sentiment.config import TrainConfig
from lowres_sentiment.corpus import Label, split
from lowres_sentiment.evaluate import ThresholdOutcome, accuracy, confusion_matrix, threshold_check
from lowres_sentiment.preprocess import PreprocessConfig, case_fold, filter_stopwords, preprocess_text, remove_punctuation, tokenize
from lowres_sentiment.vectorize import TfIdfModel, Variant

from conftest import DEMO_CONFIG, SAMPLE_PREDICTIONS, TRACE_INPUT, WORKED_DOCS, make_corpus
from oracles import best_gini_split, knn_label, nb_posterior
from test_vectorize import WORKED_WEIGHTS

RESULTS = []


def record(number, name, ok, detail=""):
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {name}" + (f" ({detail})" if detail else ""))
    assert ok, detail


def _norm(s):
    return " ".join(s.split())


def test_01_preprocessing_golden(stopwords):
    t0 = time.perf_counter()
    stage1 = remove_punctuation(TRACE_INPUT)
    stage2 = case_fold(stage1)
    stage3 = tokenize(stage2)
    stage4 = filter_stopwords(stage3, stopwords)
    elapsed = time.perf_counter() - t0
    expected = [
        "Benar juga kpu yang membuat rakyat resah Aduh kejamnya kecurangan",
        "benar juga kpu yang membuat rakyat resah aduh kejamnya kecurangan",
        "-benar- -juga- -kpu- -yang- -membuat- -rakyat- -resah- -aduh- -kejamnya- -kecurangan-",
        "-benar- -kpu- -membuat- -rakyat- -resah- -kejamnya- -kecurangan-",
    ]
    got = [stage1, stage2, " ".join(f"-{t}-" for t in stage3), " ".join(f"-{t}-" for t in stage4)]
    ok = [_norm(g) for g in got] == [_norm(e) for e in expected] and elapsed < 1.0
    record(1, "Worked tweet preprocessing stages byte-for-byte", ok, f"{elapsed * 1000:.1f} ms")


def test_02_tfidf_golden(stopwords):
    t0 = time.perf_counter()
    docs = [preprocess_text(WORKED_DOCS[k], PreprocessConfig(stopwords)) for k in "ABC"]
    model = TfIdfModel.fit(docs, Variant.PAPER)
    worst = 0.0
    for word, tf, idf, weight in WORKED_WEIGHTS:
        got = (model.tf(word, docs[0]), model.idf(word), model.weight(word, docs[0]))
        worst = max(worst, *(abs(g - e) for g, e in zip(got, (tf, idf, weight))))
    elapsed = time.perf_counter() - t0
    rakyat = (model.tf("rakyat", docs[0]), model.idf("rakyat"), model.weight("rakyat", docs[0]))
    ok = (len(WORKED_WEIGHTS) == 13 and worst <= 5e-4 and elapsed < 1.0
          and np.allclose(rakyat, (0.4, -0.2218, -0.0887), atol=5e-4))
    record(2, "Worked TF/IDF/weight values, 13 rows", ok, f"max |delta|={worst:.2e}, {elapsed * 1000:.1f} ms")


def test_03_accuracy_golden():
    predicted = [p for _, p, _ in SAMPLE_PREDICTIONS]
    gold = [g for _, _, g in SAMPLE_PREDICTIONS]
    acc = accuracy(predicted, gold)
    outcome = threshold_check(confusion_matrix(predicted, gold), 0.8)
    record(3, "Sample prediction accuracy 0.75 and threshold advice", acc == 0.75 and outcome is ThresholdOutcome.NEED_MORE_TRAINING_DATA,
           f"accuracy={acc}, {outcome.value}")


def test_04_naive_bayes_oracle():
    docs, labels = [["bagus"], ["curang"]], [1, 0]
    tfidf = TfIdfModel.fit(docs)
    model = train_nb(tfidf.count_matrix(docs), labels, alpha=1.0)
    lik = float(model.likelihood[1, tfidf.vocabulary.index("bagus")])
    post = predict_nb(model, tfidf.count_matrix([["bagus"]])).score
    exact = nb_posterior(docs, labels, ["bagus"], alpha=1)[1]
    ok = exact == Fraction(2, 3) and abs(lik - 2 / 3) <= 1e-12 and abs(post - 2 / 3) <= 1e-12 and abs(post - float(exact)) <= 1e-12
    record(4, "NB likelihood and posterior = 2/3", ok, f"likelihood={lik!r}, posterior={post!r}")


def test_05_knn_oracle():
    rng = np.random.default_rng(2024)
    X = rng.random((50, 30)) * (rng.random((50, 30)) < 0.15)
    y = rng.integers(0, 2, 50)
    Q = rng.random((50, 30)) * (rng.random((50, 30)) < 0.15)
    total = agree = 0
    for k in (1, 3, 5):
        model = train_knn(X, y, k)
        for q in Q:
            expected = knn_label(X.tolist(), y.tolist(), q.tolist(), k)
            got = predict_knn(model, q).label is Label.POSITIVE
            agree += int(got == bool(expected))
            total += 1
    record(5, "KNN matches exhaustive cosine scan, k in {1,3,5}", agree == total, f"{agree}/{total} queries")


def test_06_decision_tree_oracle():
    matches = 0
    for seed in range(20):
        rng = np.random.default_rng(seed)
        X = rng.integers(0, 3, size=(12, 6)).astype(float)
        y = rng.integers(0, 2, 12)
        if y.min() == y.max():
            y[0] = 1 - y[0]
        root = train_dt(X, y, max_depth=1).root
        matches += int((root.feature, root.threshold) == best_gini_split(X.tolist(), y.tolist()))
    record(6, "Depth-1 DT matches brute-force Gini split", matches == 20, f"{matches}/20 corpora")


def test_07_mlp_gradient_and_loss(demo_corpus):
    texts = [t for t, _, _ in SAMPLE_PREDICTIONS] + ["kpu curang, rakyat kecewa"]
    labels = np.array([1, 0, 1, 1, 0], dtype=float)
    cfg = PreprocessConfig()
    tokens = [preprocess_text(t, cfg) for t in texts]
    X = TfIdfModel.fit(tokens, Variant.STANDARD).transform_dense(tokens)
    params = init_params(X.shape[1], 8, seed=0)
    _, grads = loss_and_gradients(params, X, labels)
    eps, worst = 1e-5, 0.0
    for name in PARAM_NAMES:
        p = params[name]
        for idx in np.ndindex(p.shape):
            orig = float(p[idx])
            p[idx] = orig + eps
            up = loss(params, X, labels)
            p[idx] = orig - eps
            down = loss(params, X, labels)
            p[idx] = orig
            num = (up - down) / (2 * eps)
            ana = float(grads[name][idx])
            worst = max(worst, abs(num - ana) / max(abs(num), abs(ana), 1e-8))
    history = train("mlp", demo_corpus, TrainConfig(seed=42)).classifier.loss_history
    ok = worst <= 1e-4 and history[-1] < history[0]
    record(7, "MLP gradient check and loss decrease", ok,
           f"max rel err={worst:.2e}, loss {history[0]:.4f} -> {history[-1]:.4f}")


@pytest.fixture(scope="module")
def sweep_runs(tmp_path_factory):
    runs = []
    for i in range(2):
        out = tmp_path_factory.mktemp(f"sweep{i}")
        t0 = time.perf_counter()
        code = main(["sweep", "--config", str(DEMO_CONFIG), "--output-dir", str(out)])
        runs.append((code, out, time.perf_counter() - t0))
    return runs


def test_08_sweep_shape(sweep_runs):
    (code_a, out_a, secs), (code_b, out_b, _) = sweep_runs
    csv_a = (out_a / "sweep.csv").read_bytes()
    rows = list(csv.DictReader((out_a / "sweep.csv").open()))
    fractions = sorted({r["train_fraction"] for r in rows})
    in_range = all(0.0 <= float(r["accuracy"]) <= 1.0 for r in rows)
    identical = csv_a == (out_b / "sweep.csv").read_bytes()
    ok = code_a == code_b == 0 and len(rows) == 44 and len(fractions) == 11 and in_range and identical and secs < 60
    record(8, "Sweep emits 44 rows, byte-identical rerun", ok,
           f"{len(rows)} rows, identical={identical}, {secs:.1f} s")


def test_09_qualitative_trend(sweep_runs):
    _, out, _ = sweep_runs[0]
    rows = json.loads((out / "sweep.json").read_text())["rows"]
    acc = {(r["train_fraction"], r["method"]): r["accuracy"] for r in rows}
    fractions = sorted({f for f, _ in acc})

    def mean(m):
        return sum(acc[(f, m)] for f in fractions) / len(fractions)

    means = {m: mean(m) for m in METHODS}
    trend = {m: acc[(fractions[-1], m)] >= acc[(fractions[0], m)] - 0.05 for m in METHODS}
    ok = means["naive_bayes"] >= means["decision_tree"] and means["mlp"] >= means["decision_tree"] and all(trend.values())
    detail = ", ".join(f"{m}={means[m]:.3f}" for m in sorted(means))
    record(9, "NB and MLP >= DT on mean; no method drops >0.05 from 0.25 to 0.75", ok, detail)


def test_10_roundtrip(tmp_path, demo_corpus):
    halves = split(demo_corpus, 0.5, 42)
    assert len(halves.test) == 100
    same = []
    for method in METHODS:
        model = train(method, halves.train, TrainConfig(seed=42))
        before = predict_many(model, halves.test)
        save_model(model, tmp_path / f"{method}.json")
        after = predict_many(load_model(tmp_path / f"{method}.json"), halves.test)
        same.append(before == after)
    record(10, "Serialize/deserialize keeps predictions on 100 held-out docs", all(same),
           ", ".join(f"{m}={'ok' if s else 'DIFF'}" for m, s in zip(METHODS, same)))
