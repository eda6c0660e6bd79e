"""Shared test oracles, independent of the implementations they check."""

from __future__ import annotations

import itertools
import math
import random


def brute_force_best_matching(n, edges):
    """Exhaustively find (max cardinality then weight, max weight) optima.

    Recursion over edges in index order enumerates every matching exactly
    once.  Returns (best_weight, best_card_then_weight) where the second
    item is a (cardinality, weight) tuple maximised lexicographically.
    """
    best_weight = 0
    best_cw = (0, 0)

    def rec(idx, used, card, total):
        nonlocal best_weight, best_cw
        best_weight = max(best_weight, total)
        best_cw = max(best_cw, (card, total))
        for k in range(idx, len(edges)):
            u, v, w = edges[k]
            if u not in used and v not in used:
                used.add(u)
                used.add(v)
                rec(k + 1, used, card + 1, total + w)
                used.discard(u)
                used.discard(v)

    rec(0, set(), 0, 0)
    return best_weight, best_cw


def random_graph(rng: random.Random, max_nodes=8, max_weight=100):
    """Random simple graph with integer weights in [0, max_weight]."""
    n = rng.randint(2, max_nodes)
    all_pairs = list(itertools.combinations(range(n), 2))
    m = rng.randint(0, len(all_pairs))
    pairs = rng.sample(all_pairs, m)
    edges = [(u, v, rng.randint(0, max_weight)) for u, v in pairs]
    return n, edges


def gaussian_elimination_ols(x_rows, y):
    """Normal-equations OLS via pure-Python Gaussian elimination.

    Independent of numpy's least-squares path: builds X'X and X'y row by
    row and solves with partial pivoting.
    """
    n = len(x_rows)
    k = len(x_rows[0])
    xtx = [[sum(x_rows[i][a] * x_rows[i][b] for i in range(n)) for b in range(k)] for a in range(k)]
    xty = [sum(x_rows[i][a] * y[i] for i in range(n)) for a in range(k)]
    # forward elimination with partial pivoting
    for col in range(k):
        pivot = max(range(col, k), key=lambda r: abs(xtx[r][col]))
        if abs(xtx[pivot][col]) < 1e-12:
            raise ValueError("singular normal equations")
        xtx[col], xtx[pivot] = xtx[pivot], xtx[col]
        xty[col], xty[pivot] = xty[pivot], xty[col]
        for row in range(col + 1, k):
            factor = xtx[row][col] / xtx[col][col]
            for c in range(col, k):
                xtx[row][c] -= factor * xtx[col][c]
            xty[row] -= factor * xty[col]
    beta = [0.0] * k
    for row in range(k - 1, -1, -1):
        acc = xty[row] - sum(xtx[row][c] * beta[c] for c in range(row + 1, k))
        beta[row] = acc / xtx[row][row]
    return beta


def grid_search_logistic(x1, y):
    """Two-parameter logistic ML by coarse-to-fine grid search.

    Maximises the log-likelihood of y on (1, x1) over a shrinking grid;
    final resolution 5e-4, well inside the 1e-3 comparison tolerance.
    """

    def log_likelihood(b0, b1):
        total = 0.0
        for xi, yi in zip(x1, y):
            eta = b0 + b1 * xi
            # log sigma / log(1 - sigma) in a numerically safe form
            if eta >= 0:
                log_p = -math.log1p(math.exp(-eta))
                log_q = -eta - math.log1p(math.exp(-eta))
            else:
                log_p = eta - math.log1p(math.exp(eta))
                log_q = -math.log1p(math.exp(eta))
            total += log_p if yi == 1 else log_q
        return total

    centre = (0.0, 0.0)
    half_width = 5.0
    for _ in range(5):
        step = half_width / 20
        best = None
        for i in range(-20, 21):
            for j in range(-20, 21):
                b0 = centre[0] + i * step
                b1 = centre[1] + j * step
                ll = log_likelihood(b0, b1)
                if best is None or ll > best[0]:
                    best = (ll, b0, b1)
        centre = (best[1], best[2])
        half_width = 2 * step
    return [centre[0], centre[1]]


def pairwise_auc(scores, labels):
    """AUC by direct enumeration of positive-negative pairs (ties = 0.5)."""
    positives = [s for s, l in zip(scores, labels) if l == 1]
    negatives = [s for s, l in zip(scores, labels) if l == 0]
    total = 0.0
    for p in positives:
        for q in negatives:
            if p > q:
                total += 1.0
            elif p == q:
                total += 0.5
    return total / (len(positives) * len(negatives))


def check_matching_valid(graph_edges, matching):
    """Node-disjointness and edge-membership of a Matching."""
    edge_set = {(u, v): w for u, v, w in graph_edges}
    seen = set()
    total = 0
    for u, v in matching.pairs:
        assert (u, v) in edge_set, f"pair ({u}, {v}) is not a graph edge"
        assert u not in seen and v not in seen, "node matched twice"
        seen.add(u)
        seen.add(v)
        total += edge_set[(u, v)]
    assert total == matching.total_weight
