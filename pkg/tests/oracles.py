"""Brute-force reference implementations, deliberately naive and independent
of the package code paths they check."""

import math
from fractions import Fraction


def nb_posterior(train_docs, train_labels, query, alpha=1):
    """Exact P(class | query) via Fractions: prior * product of smoothed term probabilities."""
    vocab = sorted({t for d in train_docs for t in d})
    classes = sorted(set(train_labels))
    scores = {}
    for c in classes:
        docs_c = [d for d, l in zip(train_docs, train_labels) if l == c]
        prior = Fraction(len(docs_c), len(train_docs))
        total = sum(len(d) for d in docs_c)
        p = prior
        for tok in query:
            if tok not in vocab:
                continue
            count = sum(d.count(tok) for d in docs_c)
            p *= Fraction(count + alpha, total + alpha * len(vocab))
        scores[c] = p
    z = sum(scores.values())
    return {c: s / z for c, s in scores.items()}


def cosine(u, v):
    dot = sum(a * b for a, b in zip(u, v))
    nu = math.sqrt(sum(a * a for a in u))
    nv = math.sqrt(sum(b * b for b in v))
    if nu == 0 or nv == 0:
        return 0.0
    return dot / (nu * nv)


def knn_label(train_X, train_y, query, k):
    """Exhaustive scan; ties in similarity go to the lower index, vote ties to the nearest."""
    scored = sorted(((-cosine(row, query), i) for i, row in enumerate(train_X)))
    top = [train_y[i] for _, i in scored[:k]]
    pos = sum(1 for y in top if y == 1)
    neg = k - pos
    if pos > neg:
        return 1
    if neg > pos:
        return 0
    return top[0]


def best_gini_split(X, y):
    """Enumerate every (feature, midpoint) pair; exact impurity with Fractions.

    Returns (feature, threshold) of the first minimum in (feature, threshold)
    order, or None.
    """
    n = len(y)
    best = None
    for f in range(len(X[0])):
        values = sorted({row[f] for row in X})
        for a, b in zip(values, values[1:]):
            t = (a + b) / 2.0
            left = [y[i] for i in range(n) if X[i][f] <= t]
            right = [y[i] for i in range(n) if X[i][f] > t]
            imp = Fraction(0)
            for side in (left, right):
                m = len(side)
                p = Fraction(sum(side), m)
                imp += Fraction(m, n) * (1 - p * p - (1 - p) * (1 - p))
            if best is None or imp < best[0]:
                best = (imp, f, t)
    return None if best is None else (best[1], best[2])
