"""Shared test utilities: brute-force oracles and random element samplers.

The oracles here avoid the library's elimination route on purpose, so they
stay independent evidence: spans are enumerated vector by vector, and ranks
are read off as logarithms of span sizes.
"""

from __future__ import annotations

import itertools

import numpy as np

from soficrank.groups import GroupRingElement, ring_element
from soficrank.linalg import FpMatrix


def span_vectors(m: FpMatrix) -> set:
    """Every vector in the column span, enumerated by brute force."""
    p = m.p
    cols = [tuple(int(v) for v in m.entries[:, j]) for j in range(m.cols)]
    vectors = set()
    for combo in itertools.product(range(p), repeat=len(cols)):
        vec = [0] * m.rows
        for c, col in zip(combo, cols):
            if c:
                for i, entry in enumerate(col):
                    vec[i] = (vec[i] + c * entry) % p
        vectors.add(tuple(vec))
    return vectors


def brute_rank(m: FpMatrix) -> int:
    """log_p of the span size; independent of any elimination code."""
    size = len(span_vectors(m))
    r = 0
    power = 1
    while power < size:
        power *= m.p
        r += 1
    assert power == size, "span size is not a power of p"
    return r


def brute_intersection_dim(a: FpMatrix, b: FpMatrix) -> int:
    """Dimension of the span intersection, by enumerating both spans."""
    common = span_vectors(a) & span_vectors(b)
    r = 0
    power = 1
    while power < len(common):
        power *= a.p
        r += 1
    assert power == len(common)
    return r


def random_ring_element(
    rng: np.random.Generator,
    group,
    p: int,
    pool,
    max_support: int,
    nonzero: bool = True,
) -> GroupRingElement:
    """A random element supported inside the given pool of group elements."""
    pool = list(pool)
    while True:
        k = int(rng.integers(1, max_support + 1))
        k = min(k, len(pool))
        picks = rng.choice(len(pool), size=k, replace=False)
        pairs = [(pool[int(i)], int(rng.integers(1, p))) for i in picks]
        el = ring_element(group, p, pairs)
        if not nonzero or not el.is_zero:
            return el


def dense_column_map_matrix(p: int, images: np.ndarray) -> FpMatrix:
    """The 0/1 matrix whose column v is e_images[v], built directly."""
    n = len(images)
    out = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        out[int(images[v]), v] = 1
    return FpMatrix(p, out)
