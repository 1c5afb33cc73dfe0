from functools import lru_cache
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from satake.combinatorics import (
    Partition,
    even_subsets,
    fits_rectangle,
    k_subsets,
    n_core,
    partition_to_subset,
    partitions_with_rows,
    remove_rim_hook,
    strict_subset_order,
    subset_to_partition,
)
from satake.errors import CardinalityMismatch


def test_subset_to_partition_examples():
    assert subset_to_partition((2, 4, 7), 3) == (4, 2, 1)
    assert subset_to_partition((1, 2, 3), 3) == ()
    assert subset_to_partition((4, 8, 10), 3) == (7, 6, 3)
    with pytest.raises(CardinalityMismatch):
        subset_to_partition((1, 2), 3)


def test_round_trip_all_subsets():
    for n in range(1, 11):
        for k in range(0, n + 1):
            for I in k_subsets(n, k):
                lam = subset_to_partition(I, k)
                assert partition_to_subset(lam, k) == I
                assert fits_rectangle(lam, k, n - k)


def test_remove_rim_hook_examples():
    # top row holds element 10 of {4,8,10}; second row holds 8
    assert remove_rim_hook((7, 6, 3), 7, 1) == (subset_to_partition((3, 4, 8), 3), 2)
    assert remove_rim_hook((7, 6, 3), 7, 2) == (subset_to_partition((1, 4, 10), 3), 1)
    assert remove_rim_hook((7, 6, 3), 7, 3) is None
    assert remove_rim_hook((1,), 7, 1) is None


def test_remove_rim_hook_box_count():
    for lam in partitions_with_rows(9, 3):
        for n in range(1, 6):
            for r in range(1, len(lam) + 1):
                res = remove_rim_hook(lam, n, r)
                if res is not None:
                    mu, h = res
                    assert Partition(lam).contains(mu)
                    assert sum(lam) - sum(mu) == n
                    assert 0 <= h < n


def test_n_core_examples():
    assert n_core((7, 6, 3), 3, 7) == ((1, 1), 2, 0)
    assert n_core((), 3, 7) == ((), 0, 0)
    for lam in [(3, 2), (6,), (1, 1, 1, 1)]:
        assert n_core(lam, 4, 7) == (Partition(lam), 0, 0)


@lru_cache(maxsize=None)
def _all_reductions(lam, n):
    """Every (core, height parity) reachable by removing n-rim hooks in any order."""
    lam = Partition(lam)
    out = set()
    for r in range(1, len(lam) + 1):
        res = remove_rim_hook(lam, n, r)
        if res is None:
            continue
        mu, h = res
        for core, eps in _all_reductions(mu, n):
            out.add((core, (eps + h) % 2))
    if not out:
        out.add((lam, 0))
    return frozenset(out)


def test_n_core_order_invariant():
    for n in range(1, 8):
        for size in range(0, 21 if n >= 4 else 13):
            for lam in partitions_with_rows(size, min(size, 6)):
                reach = _all_reductions(lam, n)
                assert len(reach) == 1, (lam, n, reach)
                core, eps = next(iter(reach))
                k = max(len(lam), 1)
                c2, s2, e2 = n_core(lam, k, n)
                assert (c2, e2) == (core, eps)
                assert s2 * n == sum(lam) - sum(core)
                # the core has nothing left to remove
                assert all(remove_rim_hook(core, n, r) is None for r in range(1, len(core) + 1))


def test_fits_rectangle():
    assert fits_rectangle((1, 1), 3, 4)
    assert not fits_rectangle((5,), 2, 4)
    assert fits_rectangle((), 0, 0)
    assert not fits_rectangle((1, 1, 1), 2, 4)


def test_strict_order_examples():
    assert strict_subset_order((1, 3), (0, 1))
    assert strict_subset_order((1, 3), (1, 3))
    assert not strict_subset_order((0, 1), (1, 3))
    # containment, not the slotwise reading from the smallest element
    assert strict_subset_order((0, 1, 2, 3), (2, 3))


def test_strict_order_is_partial_order():
    for n in range(1, 9):
        S = even_subsets(n)
        le = {(I, J): strict_subset_order(I, J) for I in S for J in S}
        for I in S:
            assert le[I, I]
        for I, J in combinations(S, 2):
            assert not (le[I, J] and le[J, I])
        if n <= 6:
            for I in S:
                for J in S:
                    if not le[I, J]:
                        continue
                    for K in S:
                        if le[J, K]:
                            assert le[I, K]


@given(st.lists(st.integers(0, 8), max_size=5))
def test_partition_normalizes(parts):
    lam = Partition(sorted(parts, reverse=True))
    assert all(p > 0 for p in lam)
    assert lam.conjugate().conjugate() == lam
    assert lam.size == sum(parts)
