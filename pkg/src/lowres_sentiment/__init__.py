"""Low-resource sentiment analysis workbench: preprocessing, TF-IDF,
four from-scratch classifiers and a train-fraction sweep harness."""

from .classifiers import Prediction, SentimentModel, load_model, predict, predict_many, save_model, train
from .config import METHODS, RunConfig, SweepConfig, TrainConfig
from .corpus import Corpus, DataSplit, Label, LabeledDocument, load_corpus, split, sweep_splits
from .evaluate import (
    ConfusionMatrix,
    EvalReport,
    SweepReport,
    ThresholdOutcome,
    accuracy,
    confusion_matrix,
    emit_report,
    evaluate,
    run_sweep,
    threshold_check,
)
from .preprocess import PreprocessConfig, StopwordList, TokenizedDocument, preprocess, preprocess_text
from .vectorize import DocumentVector, TfIdfModel, Variant

__version__ = "0.1.0"
