"""Numba kernels against the numpy/pure fallbacks: identical results."""

import itertools
import math

import numpy as np
import pytest

from permmatch import kernels


def random_masks(rng, count, bits):
    return rng.integers(0, 1 << bits, size=count, dtype=np.uint64)


class TestSubsetMasks:
    def test_numpy_basics(self):
        masks = np.array([0b0011, 0b0101, 0b1111], dtype=np.uint64)
        assert kernels.count_subset_masks_numpy(masks, 0b0111) == 2
        assert kernels.count_subset_masks_numpy(masks, 0b1111) == 3
        assert kernels.count_subset_masks_numpy(masks, 0) == 0

    def test_zero_mask_always_subset(self):
        masks = np.array([0], dtype=np.uint64)
        assert kernels.count_subset_masks_numpy(masks, 0) == 1

    @pytest.mark.skipif(not kernels.NUMBA_AVAILABLE, reason="numba disabled")
    def test_backends_agree(self):
        rng = np.random.default_rng(1)
        for bits in (16, 49, 63):
            masks = random_masks(rng, 500, bits)
            for gmask in random_masks(rng, 20, bits):
                g = int(gmask)
                assert kernels.count_subset_masks_numba(
                    masks, g
                ) == kernels.count_subset_masks_numpy(masks, g)


def brute_permanent(a):
    n = len(a)
    total = 0
    for cols in itertools.permutations(range(n)):
        prod = 1
        for v, w in enumerate(cols):
            prod *= a[v][w]
        total += prod
    return total


class TestRyser:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_bigint_matches_brute(self, n):
        rng = np.random.default_rng(n)
        for _ in range(30):
            a = (rng.random((n, n)) < 0.5).astype(int).tolist()
            assert kernels.ryser_permanent_bigint(a) == brute_permanent(a)

    def test_numpy_matches_bigint(self):
        rng = np.random.default_rng(7)
        for n in range(1, 11):
            a = (rng.random((n, n)) < 0.5).astype(int)
            assert kernels.ryser_permanent_numpy(a) == kernels.ryser_permanent_bigint(
                a.tolist()
            )

    @pytest.mark.skipif(not kernels.NUMBA_AVAILABLE, reason="numba disabled")
    def test_numba_matches_bigint(self):
        rng = np.random.default_rng(8)
        for n in range(1, 11):
            a = (rng.random((n, n)) < 0.5).astype(int)
            assert kernels.ryser_permanent_numba(a) == kernels.ryser_permanent_bigint(
                a.tolist()
            )

    def test_int64_guard(self):
        ones = np.ones((13, 13), dtype=np.int64)
        with pytest.raises(ValueError):
            kernels.ryser_permanent_numpy(ones)

    def test_dispatcher_big_n_exact(self):
        # 14! overflows nothing: the bigint path takes over past n = 12
        n = 14
        assert kernels.ryser_permanent(np.ones((n, n), dtype=np.int64)) == math.factorial(n)

    def test_complete_factorials(self):
        for n in range(1, 9):
            assert kernels.ryser_permanent(np.ones((n, n))) == math.factorial(n)
