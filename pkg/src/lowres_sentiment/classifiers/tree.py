"""CART decision tree with Gini impurity and midpoint thresholds.

Split search scans features in ascending column order and thresholds in
ascending order; the first candidate whose weighted child impurity is within
``TIE_TOL`` of the minimum wins. Samples with ``x[feature] <= threshold`` go
left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .base import NEGATIVE, POSITIVE, Prediction, as_matrix

TIE_TOL = 1e-12


@dataclass(frozen=True)
class Node:
    counts: tuple  # (negative, positive) training samples reaching the node
    feature: Optional[int] = None
    threshold: Optional[float] = None
    left: Optional["Node"] = None
    right: Optional["Node"] = None

    @property
    def is_leaf(self) -> bool:
        return self.feature is None

    @property
    def label_index(self) -> int:
        neg, pos = self.counts
        return POSITIVE if pos > neg else NEGATIVE

    @property
    def positive_fraction(self) -> float:
        neg, pos = self.counts
        return pos / (neg + pos)


@dataclass(frozen=True)
class TreeModel:
    root: Node
    max_depth: Optional[int]
    min_leaf: int

    @property
    def depth(self) -> int:
        def d(node):
            return 0 if node.is_leaf else 1 + max(d(node.left), d(node.right))

        return d(self.root)

    def leaves(self) -> list[Node]:
        out, stack = [], [self.root]
        while stack:
            node = stack.pop()
            if node.is_leaf:
                out.append(node)
            else:
                stack.extend((node.right, node.left))
        return out


def gini(neg: float, pos: float) -> float:
    n = neg + pos
    if n == 0:
        return 0.0
    return 1.0 - (neg / n) ** 2 - (pos / n) ** 2


def best_split(X: np.ndarray, y: np.ndarray, min_leaf: int = 1):
    """Return ``(feature, threshold, weighted_gini)`` or None if no valid split.

    Vectorised over all features: each column is sorted once and the class
    counts of every prefix give the impurity of each cut.
    """
    n = X.shape[0]
    if n < 2 * min_leaf:
        return None
    # Constant columns cannot split; dropping them keeps sparse TF-IDF cheap.
    columns = np.flatnonzero(X.max(axis=0) > X.min(axis=0))
    if columns.size == 0:
        return None
    X = X[:, columns]
    order = np.argsort(X, axis=0, kind="stable")
    xs = np.take_along_axis(X, order, axis=0)
    ys = y[order]
    pos_left = np.cumsum(ys, axis=0)[:-1]
    n_left = np.arange(1, n)[:, None].astype(float)
    neg_left = n_left - pos_left
    pos_total = float(y.sum())
    pos_right = pos_total - pos_left
    n_right = n - n_left
    neg_right = n_right - pos_right
    # n * weighted gini = n_l - (p_l^2 + q_l^2)/n_l + n_r - (p_r^2 + q_r^2)/n_r
    impurity = (n - (pos_left**2 + neg_left**2) / n_left - (pos_right**2 + neg_right**2) / n_right) / n

    valid = xs[1:] > xs[:-1]
    valid &= (n_left >= min_leaf) & (n_right >= min_leaf)
    if not valid.any():
        return None
    impurity = np.where(valid, impurity, np.inf)
    best = impurity.min()
    # nonzero on the transpose is ordered by feature first, then cut position.
    feats, cuts = np.nonzero((impurity <= best + TIE_TOL).T)
    f, c = int(feats[0]), int(cuts[0])
    threshold = (xs[c, f] + xs[c + 1, f]) / 2.0
    return int(columns[f]), float(threshold), float(impurity[c, f])


def _grow(X, y, depth, max_depth, min_leaf) -> Node:
    pos = int(y.sum())
    counts = (len(y) - pos, pos)
    if pos == 0 or pos == len(y) or (max_depth is not None and depth >= max_depth):
        return Node(counts)
    found = best_split(X, y, min_leaf)
    if found is None:
        return Node(counts)
    f, t, _ = found
    mask = X[:, f] <= t
    return Node(
        counts,
        feature=f,
        threshold=t,
        left=_grow(X[mask], y[mask], depth + 1, max_depth, min_leaf),
        right=_grow(X[~mask], y[~mask], depth + 1, max_depth, min_leaf),
    )


def train_dt(X, y, max_depth: Optional[int] = None, min_leaf: int = 1) -> TreeModel:
    X = as_matrix(X)
    y = np.asarray(y, dtype=np.int64)
    if len(y) == 0:
        raise ValueError("decision tree needs at least one training document")
    return TreeModel(_grow(X, y, 0, max_depth, min_leaf), max_depth, min_leaf)


def leaf_for(model: TreeModel, x) -> Node:
    x = np.asarray(x, dtype=float).ravel()
    node = model.root
    while not node.is_leaf:
        node = node.left if x[node.feature] <= node.threshold else node.right
    return node


def predict_dt(model: TreeModel, x) -> Prediction:
    leaf = leaf_for(model, x)
    return Prediction.from_index(leaf.label_index, leaf.positive_fraction)


def predict_dt_batch(model: TreeModel, X) -> list[Prediction]:
    return [predict_dt(model, row) for row in as_matrix(X)]


def to_nodes(model: TreeModel) -> list[dict]:
    """Flatten to a pre-order node list; children referenced by list index."""
    nodes: list[dict] = []

    def visit(node: Node) -> int:
        idx = len(nodes)
        entry = {"counts": list(node.counts)}
        nodes.append(entry)
        if not node.is_leaf:
            entry["feature"] = node.feature
            entry["threshold"] = node.threshold
            entry["left"] = visit(node.left)
            entry["right"] = visit(node.right)
        return idx

    visit(model.root)
    return nodes


def from_nodes(nodes: list[dict], max_depth, min_leaf) -> TreeModel:
    def build(i: int) -> Node:
        e = nodes[i]
        counts = tuple(int(c) for c in e["counts"])
        if "feature" not in e:
            return Node(counts)
        return Node(counts, int(e["feature"]), float(e["threshold"]), build(e["left"]), build(e["right"]))

    return TreeModel(build(0), max_depth, min_leaf)
