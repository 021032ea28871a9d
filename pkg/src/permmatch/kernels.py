"""Hot counting kernels with a numba fast path and a numpy fallback.

Two kernels live here:

* subset-mask counting: how many of a batch of edge bitmasks are contained
  in a graph's edge bitmask (used for path qualification and sweeps);
* Ryser's inclusion-exclusion permanent with Gray-code subset iteration.

Set PERMMATCH_NO_NUMBA=1 to force the numpy/pure-Python fallback; the
dispatchers also fall back automatically if numba is unavailable.  Results
are exact on every path: the int64 kernels are only used where the Ryser
partial sums provably fit (n <= 12 for 0/1 matrices); larger n goes through
arbitrary-precision Python integers.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("PERMMATCH_NO_NUMBA", "").lower() in ("1", "true", "yes")

if not _DISABLED:
    try:
        import numba
    except ImportError:  # pragma: no cover
        numba = None
else:
    numba = None

NUMBA_AVAILABLE = numba is not None

# Partial Ryser sums are bounded by 2^n * n^n; for n <= 12 that is < 2^63.
INT64_SAFE_N = 12

_U64_ALL = np.uint64(0xFFFFFFFFFFFFFFFF)


# ---------------------------------------------------------------------------
# subset-mask counting

def count_subset_masks_numpy(masks: np.ndarray, gmask: int) -> int:
    g = np.uint64(gmask)
    return int(np.count_nonzero((masks & g) == masks))


if NUMBA_AVAILABLE:

    @numba.njit(cache=True)
    def _count_subset_masks_nb(masks, gmask):
        c = 0
        for m in masks:
            if m & gmask == m:
                c += 1
        return c

    def count_subset_masks_numba(masks: np.ndarray, gmask: int) -> int:
        return int(_count_subset_masks_nb(masks, np.uint64(gmask)))

else:
    count_subset_masks_numba = None


def count_subset_masks(masks: np.ndarray, gmask: int) -> int:
    """Number of entries of `masks` (uint64) that are bit-subsets of gmask."""
    if NUMBA_AVAILABLE:
        return count_subset_masks_numba(masks, gmask)
    return count_subset_masks_numpy(masks, gmask)


# ---------------------------------------------------------------------------
# Ryser permanent

def ryser_permanent_bigint(a) -> int:
    """Gray-code Ryser over Python ints; exact for any size."""
    n = len(a)
    rowsum = [0] * n
    total = 0
    prev = 0
    size = 0
    for j in range(1, 1 << n):
        g = j ^ (j >> 1)
        diff = g ^ prev
        col = diff.bit_length() - 1
        if g & diff:
            size += 1
            for v in range(n):
                rowsum[v] += a[v][col]
        else:
            size -= 1
            for v in range(n):
                rowsum[v] -= a[v][col]
        prev = g
        prod = 1
        for s in rowsum:
            prod *= s
            if prod == 0:
                break
        if (n - size) % 2 == 0:
            total += prod
        else:
            total -= prod
    return total


def ryser_permanent_numpy(a: np.ndarray) -> int:
    """Vectorized Ryser; requires n <= INT64_SAFE_N so int64 cannot overflow."""
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[0]
    if n > INT64_SAFE_N:
        raise ValueError(f"numpy kernel limited to n <= {INT64_SAFE_N}")
    idx = np.arange(1, 1 << n, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(n)) & 1  # (2^n - 1, n)
    rowsums = bits @ a.T
    prods = rowsums.prod(axis=1)
    sizes = bits.sum(axis=1)
    signs = np.where((n - sizes) % 2 == 0, 1, -1)
    return int((signs * prods).sum())


if NUMBA_AVAILABLE:

    @numba.njit(cache=True)
    def _ryser_nb(a):
        n = a.shape[0]
        rowsum = np.zeros(n, np.int64)
        total = 0
        prev = 0
        size = 0
        for j in range(1, 1 << n):
            g = j ^ (j >> 1)
            diff = g ^ prev
            col = 0
            while (diff >> col) & 1 == 0:
                col += 1
            if g & diff != 0:
                size += 1
                for v in range(n):
                    rowsum[v] += a[v, col]
            else:
                size -= 1
                for v in range(n):
                    rowsum[v] -= a[v, col]
            prev = g
            prod = 1
            for v in range(n):
                prod *= rowsum[v]
                if prod == 0:
                    break
            if (n - size) % 2 == 0:
                total += prod
            else:
                total -= prod
        return total

    def ryser_permanent_numba(a: np.ndarray) -> int:
        a = np.ascontiguousarray(a, dtype=np.int64)
        if a.shape[0] > INT64_SAFE_N:
            raise ValueError(f"numba kernel limited to n <= {INT64_SAFE_N}")
        return int(_ryser_nb(a))

else:
    ryser_permanent_numba = None


def ryser_permanent(a) -> int:
    """Permanent of a square 0/1 matrix, exact."""
    mat = np.asarray(a, dtype=np.int64)
    n = mat.shape[0]
    if n > INT64_SAFE_N:
        return ryser_permanent_bigint(mat.tolist())
    if NUMBA_AVAILABLE:
        return ryser_permanent_numba(mat)
    return ryser_permanent_numpy(mat)
