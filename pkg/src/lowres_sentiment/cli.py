"""Command-line interface.

Exit codes: 0 success, 2 input/config error, 3 model file error, 4 runtime
failure. Configuration is a flat JSON object (see ``configs/demo_sweep.json``);
its path comes from ``--config`` or the ``LOWRES_SENTIMENT_CONFIG`` environment
variable, and any flag given on the command line overrides the file.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from importlib import resources
from pathlib import Path

from .classifiers import load_model, save_model, train
from .config import METHODS, RunConfig, default_config_path
from .corpus import Corpus, Label, load_corpus, split
from .errors import ConfigError, InputError, ModelLoadError, SentimentError
from .evaluate import (
    SweepReport,
    emit_report,
    evaluate,
    format_summary,
    run_sweep,
    threshold_check,
)
from .preprocess import PreprocessConfig, StopwordList, preprocess, preprocess_text, trace_stages

log = logging.getLogger("lowres_sentiment")

EXIT_OK, EXIT_INPUT, EXIT_MODEL, EXIT_RUNTIME = 0, 2, 3, 4


def bundled_corpus_path() -> Path:
    return Path(str(resources.files("lowres_sentiment.data").joinpath("demo_corpus.csv")))


# Flag dest -> config key, for flags that may override the config file.
_OVERRIDES = {
    "corpus": "corpus",
    "format": "format",
    "stopwords": "stopwords",
    "variant": "variant",
    "methods": "methods",
    "seed": "seed",
    "output_dir": "output_dir",
    "jobs": "jobs",
    "knn_k": "knn_k",
    "dt_max_depth": "dt_max_depth",
    "dt_min_leaf": "dt_min_leaf",
    "mlp_hidden": "mlp_hidden",
    "mlp_learning_rate": "mlp_learning_rate",
    "mlp_epochs": "mlp_epochs",
    "nb_alpha": "nb_alpha",
    "sweep_start": "sweep_start",
    "sweep_end": "sweep_end",
    "sweep_step": "sweep_step",
}


def resolve_config(args, require_seed: bool = True) -> RunConfig:
    path = getattr(args, "config", None) or default_config_path()
    data: dict = {}
    base = None
    if path:
        path = Path(path)
        if not path.is_file():
            raise ConfigError(f"config file not found: {path}")
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"{path}: expected a JSON object")
        base = path.parent
        # Config-relative paths; flags below stay relative to the cwd.
        for key in ("corpus", "stopwords"):
            if data.get(key) and not Path(data[key]).is_absolute():
                data[key] = str(base / data[key])
    for dest, key in _OVERRIDES.items():
        value = getattr(args, dest, None)
        if value is not None:
            data[key] = value
    if not require_seed:
        data.setdefault("seed", 0)
    cfg = RunConfig.from_mapping(data)
    unknown = [m for m in cfg.methods if m not in METHODS]
    if unknown:
        raise ConfigError(f"unknown method(s) {unknown}; expected {', '.join(METHODS)}")
    cfg.validate_paths()
    return cfg


def _corpus(cfg: RunConfig) -> Corpus:
    return load_corpus(cfg.corpus or bundled_corpus_path(), cfg.format)


def _preprocess_config(cfg: RunConfig) -> PreprocessConfig:
    words = StopwordList.from_file(cfg.stopwords) if cfg.stopwords else StopwordList.default()
    return PreprocessConfig(words)


def cmd_ingest(args) -> int:
    cfg = resolve_config(args, require_seed=False)
    corpus = _corpus(cfg)
    counts = corpus.label_counts()
    print(f"{len(corpus)} documents ({counts[Label.POSITIVE]} positive/{counts[Label.NEGATIVE]} negative)")
    seen: dict = {}
    for doc in corpus:
        seen.setdefault(doc.text.strip().lower(), []).append(doc.id)
    dups = [ids for ids in seen.values() if len(ids) > 1]
    print(f"duplicate ids: 0; duplicate texts: {len(dups)}")
    for ids in dups:
        print("  same text: " + ", ".join(ids))
    print(f"fingerprint: {corpus.fingerprint()}")
    return EXIT_OK


def cmd_preprocess(args) -> int:
    cfg = resolve_config(args, require_seed=False)
    pre = _preprocess_config(cfg)
    if args.text is not None:
        if args.trace:
            for i, (before, after) in enumerate(trace_stages(args.text, pre.stopwords), start=1):
                print(f"{i}\t{before}\t{after}")
        else:
            print(" ".join(preprocess_text(args.text, pre)))
        return EXIT_OK
    for doc in _corpus(cfg):
        print(f"{doc.id}\t{' '.join(preprocess(doc, pre).tokens)}")
    return EXIT_OK


def cmd_train(args) -> int:
    cfg = resolve_config(args)
    corpus = _corpus(cfg)
    method = args.method or (cfg.methods[0] if len(cfg.methods) == 1 else None)
    if method is None:
        raise ConfigError("choose one method with --method")
    if method not in METHODS:
        raise ConfigError(f"unknown method {method!r}")
    docs = corpus
    if args.train_fraction is not None:
        docs = split(corpus, args.train_fraction, cfg.seed).train
    model = train(method, docs, cfg.train, _preprocess_config(cfg), cfg.variant)
    try:
        save_model(model, args.out)
    except OSError as exc:
        raise ModelLoadError(f"cannot write model {args.out}: {exc}") from exc
    print(f"trained {method} on {len(docs)} documents ({len(model.tfidf.vocabulary)} terms) -> {args.out}")
    return EXIT_OK


def _read_inputs(args):
    if args.text:
        return [(f"text{i}", t) for i, t in enumerate(args.text, start=1)]
    if args.input in (None, "-"):
        lines = sys.stdin.read().splitlines()
    else:
        path = Path(args.input)
        if not path.is_file():
            raise InputError(f"MissingFile: {path}")
        lines = path.read_text(encoding="utf-8").splitlines()
    out = []
    for i, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        if "\t" in line:
            doc_id, text = line.split("\t", 1)
        else:
            doc_id, text = f"line{i}", line
        out.append((doc_id, text))
    return out


def cmd_predict(args) -> int:
    model = load_model(args.model)
    inputs = _read_inputs(args)
    if not inputs:
        return EXIT_OK
    preds = model.predict_texts([t for _, t in inputs])
    for (doc_id, _), p in zip(inputs, preds):
        print(f"{doc_id}\t{p.label.display}\t{p.score:.6f}")
    return EXIT_OK


def cmd_evaluate(args) -> int:
    cfg = resolve_config(args, require_seed=False)
    model = load_model(args.model)
    corpus = _corpus(cfg)
    report = evaluate(model, corpus)
    c = report.confusion
    print(f"method: {model.method}")
    print(f"accuracy: {report.accuracy:.4f} ({c.tp + c.tn}/{c.total})")
    print(f"confusion: tp={c.tp} fp={c.fp} tn={c.tn} fn={c.fn}")
    print(f"threshold {args.threshold:.2f}: {threshold_check(report, args.threshold).value}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = resolve_config(args)
    corpus = _corpus(cfg)
    report = run_sweep(corpus, cfg.methods, cfg.sweep, cfg.train, _preprocess_config(cfg), cfg.variant, cfg.jobs)
    out = Path(cfg.output_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        paths = [emit_report(report, fmt, out / f"sweep.{fmt}") for fmt in ("csv", "json", "svg")]
    except OSError as exc:
        raise InputError(f"cannot write reports to {out}: {exc}") from exc
    print(format_summary(report))
    for p in paths:
        print(f"wrote {p}")
    return EXIT_OK


def cmd_report(args) -> int:
    path = Path(args.input)
    if not path.is_file():
        raise InputError(f"MissingFile: {path}")
    try:
        report = SweepReport.from_dict(json.loads(path.read_text(encoding="utf-8")))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: not a sweep JSON report ({exc})") from exc
    if args.out:
        print(f"wrote {emit_report(report, args.format, args.out)}")
    else:
        print(format_summary(report))
    return EXIT_OK


def _add_common(p, corpus=True):
    p.add_argument("--config", help="JSON run config (default: $LOWRES_SENTIMENT_CONFIG)")
    if corpus:
        p.add_argument("--corpus", help="corpus file (default: bundled 200-document demo)")
        p.add_argument("--format", choices=("csv", "jsonl"))
    p.add_argument("--stopwords", help="stopword file, one word per line")


def _add_training(p):
    p.add_argument("--seed", type=int)
    p.add_argument("--variant", choices=("paper", "standard"))
    p.add_argument("--knn-k", dest="knn_k", type=int)
    p.add_argument("--dt-max-depth", dest="dt_max_depth", type=int)
    p.add_argument("--dt-min-leaf", dest="dt_min_leaf", type=int)
    p.add_argument("--mlp-hidden", dest="mlp_hidden", type=int)
    p.add_argument("--mlp-learning-rate", dest="mlp_learning_rate", type=float)
    p.add_argument("--mlp-epochs", dest="mlp_epochs", type=int)
    p.add_argument("--nb-alpha", dest="nb_alpha", type=float)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lowres-sentiment", description="Low-resource sentiment analysis workbench")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load a corpus and summarise it")
    _add_common(p)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("preprocess", help="print preprocessed tokens")
    _add_common(p)
    p.add_argument("--text", help="preprocess this text instead of a corpus")
    p.add_argument("--trace", action="store_true", help="with --text, show every stage")
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("train", help="train one classifier and save it as JSON")
    _add_common(p)
    _add_training(p)
    p.add_argument("--method", choices=METHODS)
    p.add_argument("--train-fraction", type=float, help="train on a seeded split instead of the whole corpus")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("predict", help="label texts with a saved model")
    p.add_argument("--model", required=True)
    p.add_argument("--text", action="append", help="text to classify (repeatable)")
    p.add_argument("--input", help="file of lines 'text' or 'id<TAB>text' ('-' = stdin)")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("evaluate", help="score a saved model on a labeled corpus")
    _add_common(p)
    p.add_argument("--model", required=True)
    p.add_argument("--threshold", type=float, default=0.8)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("sweep", help="run the train-fraction sweep over all methods")
    _add_common(p)
    _add_training(p)
    p.add_argument("--methods", help="comma-separated subset of " + ",".join(METHODS))
    p.add_argument("--sweep-start", dest="sweep_start", type=float)
    p.add_argument("--sweep-end", dest="sweep_end", type=float)
    p.add_argument("--sweep-step", dest="sweep_step", type=float)
    p.add_argument("--output-dir", dest="output_dir")
    p.add_argument("--jobs", type=int, help="worker processes (results are identical for any value)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("report", help="re-emit a saved sweep JSON as csv, json or svg")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ModelLoadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MODEL
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SentimentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as exc:  # noqa: BLE001
        log.debug("unhandled failure", exc_info=True)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
