"""Exact matrix permanents.

``permanent_fast`` implements Ryser's inclusion-exclusion formula

    perm(A) = (-1)^n  sum_{S subset [n]} (-1)^|S| prod_i sum_{j in S} A[i, j]

visiting subsets in Gray-code order so consecutive row-sum vectors differ by
one column. The subset sequence is cut into fixed-size chunks; inside a
chunk the row sums are rebuilt with a cumulative sum of the signed column
updates, which keeps the work O(2^n n) and vectorized. ``permanent_naive``
is the literal sum over all n! permutations and serves as the oracle.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .exceptions import CapacityError

MAX_FAST_DIM = 30
MAX_NAIVE_DIM = 9
DEFAULT_CHUNK_BITS = 14


def _as_square(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
    return a


def _chunk_terms(a: np.ndarray, lo: int, hi: int) -> np.ndarray:
    """Signed Ryser terms for Gray-code ranks lo..hi-1."""
    n = a.shape[0]
    ranks = np.arange(lo, hi, dtype=np.int64)
    start = lo ^ (lo >> 1)
    cols = [j for j in range(n) if (start >> j) & 1]
    row0 = a[:, cols].sum(axis=1) if cols else np.zeros(n, dtype=complex)

    if hi - lo > 1:
        # rank k flips bit ctz(k); the bit is set in gray(k) iff it was added
        k = ranks[1:]
        low = k & -k
        flipped = np.log2(low.astype(np.float64)).astype(np.int64)
        added = ((k ^ (k >> 1)) & low) != 0
        deltas = a[:, flipped].T * np.where(added, 1.0, -1.0)[:, None]
        rows = np.empty((hi - lo, n), dtype=complex)
        rows[0] = row0
        rows[1:] = row0 + np.cumsum(deltas, axis=0)
    else:
        rows = row0[None, :]

    # popcount(gray(k)) has the parity of k
    signs = np.where(ranks & 1, -1.0, 1.0)
    return signs * np.prod(rows, axis=1)


class _Neumaier:
    __slots__ = ("total", "comp")

    def __init__(self):
        self.total = 0.0
        self.comp = 0.0

    def add(self, x):
        t = self.total + x
        if abs(self.total) >= abs(x):
            self.comp += (self.total - t) + x
        else:
            self.comp += (x - t) + self.total
        self.total = t

    @property
    def value(self):
        return self.total + self.comp


def permanent_fast(matrix, *, compensated: bool = False,
                   chunk_bits: int = DEFAULT_CHUNK_BITS, workers: int = 1) -> complex:
    """Permanent via Gray-code Ryser, O(2^n n).

    Parameters
    ----------
    matrix : array_like
        Square complex matrix with dimension at most ``MAX_FAST_DIM``.
    compensated : bool
        Accumulate with ``math.fsum`` inside chunks and Neumaier summation
        across chunks instead of plain pairwise summation.
    chunk_bits : int
        Subsets are processed in chunks of ``2**chunk_bits`` ranks. The
        summation order, and hence the exact floating-point result, is fixed
        by this value.
    workers : int
        Number of threads used to evaluate chunks. Chunk results are always
        combined in rank order, so the result does not depend on scheduling.

    Returns
    -------
    complex
    """
    a = _as_square(matrix)
    n = a.shape[0]
    if n > MAX_FAST_DIM:
        raise CapacityError(f"permanent_fast supports dim <= {MAX_FAST_DIM}, got {n}")
    if n == 1:
        return complex(a[0, 0])

    total = 1 << n
    size = 1 << max(1, chunk_bits)
    bounds = [(lo, min(lo + size, total)) for lo in range(0, total, size)]

    def run(bound):
        terms = _chunk_terms(a, *bound)
        if compensated:
            return complex(math.fsum(terms.real), math.fsum(terms.imag))
        return complex(terms.sum())

    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(run, bounds))
    else:
        partials = [run(b) for b in bounds]

    if compensated:
        re, im = _Neumaier(), _Neumaier()
        for z in partials:
            re.add(z.real)
            im.add(z.imag)
        result = complex(re.value, im.value)
    else:
        result = complex(sum(partials))
    return -result if n % 2 else result


def permanent_naive(matrix) -> complex:
    """Permanent as the explicit sum over all permutations (dim <= 9)."""
    a = _as_square(matrix)
    n = a.shape[0]
    if n > MAX_NAIVE_DIM:
        raise CapacityError(f"permanent_naive supports dim <= {MAX_NAIVE_DIM}, got {n}")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    return complex(np.prod(a[np.arange(n), perms], axis=1).sum())


def permanent(matrix, **kwargs) -> complex:
    """Default permanent routine (alias of :func:`permanent_fast`)."""
    return permanent_fast(matrix, **kwargs)
