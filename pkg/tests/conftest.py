from pathlib import Path

import pytest

from lowres_sentiment.cli import bundled_corpus_path
from lowres_sentiment.corpus import Corpus, Label, LabeledDocument, load_corpus
from lowres_sentiment.preprocess import StopwordList

REPO = Path(__file__).resolve().parents[1]
DEMO_CONFIG = REPO / "configs" / "demo_sweep.json"

TRACE_INPUT = "Benar juga, kpu yang membuat rakyat resah. Aduh kejamnya kecurangan."

WORKED_DOCS = {
    "A": "Jangan ancam rakyat, rakyat indonesia pintar",
    "B": "Rakyat tidak pernah gagal bernegara, pemerintah yang gagal bernegara",
    "C": "Suara rakyat dicuri, bagaimana uang rakyat",
}

# (testing text, predicted, manually labeled)
SAMPLE_PREDICTIONS = [
    ("kalau terus melanggar, hukumannya segera diterapkan", "Positive", "Positive"),
    ("kalau bersih kenapa takut audit forensic", "Negative", "Negative"),
    ("harus banyak belajar ke @BKNgoid dalam hal penyelenggaraan akbar", "Positive", "Positive"),
    ("Kebenaran meninggikan derajat bangsa tetapi dosa adalah noda bangsa", "Negative", "Positive"),
]


@pytest.fixture(scope="session")
def demo_corpus() -> Corpus:
    return load_corpus(bundled_corpus_path())


@pytest.fixture(scope="session")
def stopwords() -> StopwordList:
    return StopwordList.default()


def make_corpus(items):
    return Corpus(LabeledDocument(f"d{i}", text, Label.parse(label)) for i, (text, label) in enumerate(items))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in sorted(results, key=lambda l: int(l.split("]")[1].split(".")[0])):
            terminalreporter.write_line(line)
