"""Shared independent oracles for the test suite.

These deliberately avoid the library's own code paths: the partial-trace
oracle works by explicit basis-index bookkeeping, the exponential oracle by
scaled-and-squared Taylor series, entropies by direct scalar evaluation.
"""

import math

import numpy as np
import pytest


def brute_partial_trace(rho: np.ndarray, keep, n: int) -> np.ndarray:
    """Partial trace by explicit summation over traced basis indices."""
    keep = sorted(keep)
    traced = [q for q in range(n) if q not in keep]
    dk = 2 ** len(keep)
    out = np.zeros((dk, dk), dtype=complex)

    def full_index(keep_bits, traced_bits):
        idx = 0
        for q, b in zip(keep, keep_bits):
            idx |= b << (n - 1 - q)
        for q, b in zip(traced, traced_bits):
            idx |= b << (n - 1 - q)
        return idx

    for r in range(dk):
        rb = [(r >> (len(keep) - 1 - i)) & 1 for i in range(len(keep))]
        for c in range(dk):
            cb = [(c >> (len(keep) - 1 - i)) & 1 for i in range(len(keep))]
            for t in range(2 ** len(traced)):
                tb = [(t >> (len(traced) - 1 - i)) & 1 for i in range(len(traced))]
                out[r, c] += rho[full_index(rb, tb), full_index(cb, tb)]
    return out


def series_expm(m: np.ndarray, squarings: int = 20, terms: int = 30) -> np.ndarray:
    """exp(m) by Taylor series with scaling and squaring."""
    a = m / 2**squarings
    acc = np.eye(m.shape[0], dtype=complex)
    term = np.eye(m.shape[0], dtype=complex)
    for k in range(1, terms):
        term = term @ a / k
        acc = acc + term
    for _ in range(squarings):
        acc = acc @ acc
    return acc


def scalar_entropy(probs) -> float:
    """-sum p ln p over a probability list, skipping zeros."""
    return -sum(p * math.log(p) for p in probs if p > 0)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
