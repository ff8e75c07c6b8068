"""Run the train-fraction sweep on the demo corpus (or --corpus) and print
the accuracy table plus the checks behind the qualitative trend.

    python scripts/run_sweep.py [--config configs/demo_sweep.json] [--corpus PATH] [--out results/demo]
"""

import argparse
from pathlib import Path

from lowres_sentiment.cli import bundled_corpus_path
from lowres_sentiment.config import RunConfig
from lowres_sentiment.corpus import load_corpus
from lowres_sentiment.evaluate import emit_report, format_summary, mean_accuracy, run_sweep, threshold_check
from lowres_sentiment.preprocess import PreprocessConfig, StopwordList

ROOT = Path(__file__).resolve().parents[1]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--config", type=Path, default=ROOT / "configs" / "demo_sweep.json")
    ap.add_argument("--corpus", type=Path)
    ap.add_argument("--out", type=Path, default=ROOT / "results" / "demo")
    args = ap.parse_args()

    cfg = RunConfig.load(args.config)
    corpus = load_corpus(args.corpus or cfg.corpus or bundled_corpus_path())
    stopwords = StopwordList.from_file(cfg.stopwords) if cfg.stopwords else StopwordList.default()
    report = run_sweep(corpus, cfg.methods, cfg.sweep, cfg.train, PreprocessConfig(stopwords), cfg.variant, cfg.jobs)

    args.out.mkdir(parents=True, exist_ok=True)
    for fmt in ("csv", "json", "svg"):
        emit_report(report, fmt, args.out / f"sweep.{fmt}")

    print(format_summary(report))
    print()
    first, last = report.fractions[0], report.fractions[-1]
    table = report.accuracy_table()
    for m in report.methods:
        passing = sum(threshold_check(r).value == "Pass" for r in report.rows if r.method == m)
        print(f"{m:>14}: mean {mean_accuracy(report, m):.3f}, "
              f"{first:.2f}->{last:.2f}: {table[(first, m)]:.3f}->{table[(last, m)]:.3f}, "
              f">=0.80 on {passing}/{len(report.fractions)} splits")
    print(f"\nreports in {args.out}")


if __name__ == "__main__":
    main()
