"""Generate the bundled 200-document synthetic demo corpus.

The texts are Indonesian-flavoured election tweets assembled from word pools:
each document mixes a few sentiment cue words (Zipf-weighted, so rare cues are
only seen with enough training data), topical filler, stopwords, mentions,
hashtags and punctuation. A small fraction of labels is flipped so no
classifier can reach 100%.

    python scripts/make_demo_corpus.py [--out PATH] [--seed 2019]
"""

import argparse
from pathlib import Path

import numpy as np

from lowres_sentiment.corpus import Corpus, Label, LabeledDocument, write_corpus

POSITIVE = """bagus jujur adil bersih percaya dukung hebat mantap transparan terimakasih
semangat aman damai tertib sukses apresiasi profesional netral berhasil bangga
salut tenang amanah lancar rapi cermat tegas baik setuju hormat""".split()

NEGATIVE = """curang bohong kecurangan salah manipulasi resah kecewa marah gagal hancur
jahat licik kacau palsu dusta busuk tipu penipuan rusak kejam takut malu buruk
lemah zalim culas memalukan amburadul bobrok parah""".split()

TOPIC = """kpu suara pemilu rakyat situng data input hitung tps formulir bawaslu
capres pilpres rekapitulasi hasil sistem petugas komisi pemilihan umum indonesia
negara bangsa presiden relawan saksi server audit forensik berita media akun
kotak surat pemilih kampanye debat demokrasi provinsi kabupaten kecamatan desa
angka selisih laporan bukti video foto warga pendukung paslon quickcount realcount""".split()

STOP = """yang dan di ke dari ini itu juga sudah akan untuk dengan pada karena
kalau saja lagi tapi dong sih ya nah aduh wah""".split()

MENTIONS = ["@KPU_ID", "@bawaslu_RI", "@BKNgoid", "@relawan01", "@warganet"]
HASHTAGS = ["#kpujangancurang", "#pemilu2019", "#kawalsuara"]
PUNCT = [",", ".", "!", "?", "!!", "...", ":"]


def zipf_weights(n, s=1.1):
    w = 1.0 / np.arange(1, n + 1) ** s
    return w / w.sum()


def make_text(rng, label):
    own, other = (POSITIVE, NEGATIVE) if label is Label.POSITIVE else (NEGATIVE, POSITIVE)
    words = list(rng.choice(own, size=rng.integers(1, 4), p=zipf_weights(len(own))))
    if rng.random() < 0.25:
        words.append(rng.choice(other, p=zipf_weights(len(other))))
    words += list(rng.choice(TOPIC, size=rng.integers(3, 8)))
    words += list(rng.choice(STOP, size=rng.integers(1, 4)))
    rng.shuffle(words)
    out = []
    for i, w in enumerate(words):
        w = str(w)
        if i == 0 or rng.random() < 0.08:
            w = w.capitalize()
        out.append(w)
        if rng.random() < 0.15:
            out[-1] += str(rng.choice(PUNCT))
    if rng.random() < 0.3:
        out.insert(0, str(rng.choice(MENTIONS)))
    if rng.random() < 0.6:
        out.append(str(rng.choice(HASHTAGS)))
    return " ".join(out)


def build(n=200, seed=2019, noise=0.07):
    rng = np.random.default_rng(seed)
    labels = [Label.POSITIVE] * (n // 2) + [Label.NEGATIVE] * (n - n // 2)
    rng.shuffle(labels)
    docs = []
    for i, label in enumerate(labels):
        text = make_text(rng, label)
        if rng.random() < noise:
            label = Label.NEGATIVE if label is Label.POSITIVE else Label.POSITIVE
        docs.append(LabeledDocument(f"t{i + 1:03d}", text, label))
    return Corpus(docs)


def main():
    default_out = Path(__file__).resolve().parents[1] / "src" / "lowres_sentiment" / "data" / "demo_corpus.csv"
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=default_out)
    ap.add_argument("--seed", type=int, default=2019)
    ap.add_argument("-n", type=int, default=200)
    args = ap.parse_args()
    corpus = build(args.n, args.seed)
    write_corpus(corpus, args.out)
    counts = corpus.label_counts()
    print(f"wrote {len(corpus)} documents to {args.out} "
          f"({counts[Label.POSITIVE]} positive/{counts[Label.NEGATIVE]} negative)")


if __name__ == "__main__":
    main()
