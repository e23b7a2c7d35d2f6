"""Swap edit distance: adjacent transpositions only.

Swaps preserve the multiset of symbols, so any pair with different lengths or
Parikh vectors is unreachable. Otherwise the k-th occurrence of every symbol
in S moves to the k-th occurrence in T, and the distance is the number of
inversions of that occurrence mapping.
"""

from __future__ import annotations

import time
from typing import Sequence

from .rank_select import PostingListIndex
from .results import UNREACHABLE, Counters, DistanceResult
from .text_model import parikh


class DegenerateInstanceError(ValueError):
    """Lengths or Parikh vectors differ; no swap sequence exists."""


def build_permutation(S: Sequence[int], T: Sequence[int], sigma: int | None = None,
                      counters: Counters | None = None) -> list[int]:
    """``pi[i] = select(T, S[i], rank(S, S[i], i))``: where position ``i`` of S lands in T."""
    if sigma is None:
        sigma = max(max(S, default=-1), max(T, default=-1)) + 1
    if len(S) != len(T) or parikh(S, sigma) != parikh(T, sigma):
        raise DegenerateInstanceError("swap distance is infinite: Parikh vectors differ")
    if counters is None:
        counters = Counters()
    src = PostingListIndex(S, sigma).cursor(counters)
    tgt = PostingListIndex(T, sigma).cursor(counters)
    return [tgt.select(a, src.rank(a, i)) for i, a in enumerate(S)]


def count_inversions_oracle(pi: Sequence[int]) -> int:
    n = len(pi)
    return sum(1 for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j])


def count_inversions_adaptive(pi: Sequence[int], counters: Counters | None = None) -> int:
    """Inversions counted by local insertion sort.

    Values are inserted left to right into a sorted run. The insertion point
    is found by galloping from the previous one, so nearly sorted input costs
    few comparisons; every insertion adds the number of larger values already
    present. ``counters.comparisons`` records the key comparisons.
    """
    if counters is None:
        counters = Counters()
    run: list[int] = []
    finger = 0
    inversions = 0
    comparisons = 0
    for x in pi:
        size = len(run)
        # find pos = number of entries < x, searching from finger
        if finger > 0:
            comparisons += 1
            left_ok = run[finger - 1] < x
        else:
            left_ok = True
        if left_ok:
            lo, step = finger, 1
            while lo + step - 1 < size:
                comparisons += 1
                if run[lo + step - 1] < x:
                    lo += step
                    step <<= 1
                else:
                    break
            hi = min(lo + step - 1, size)
        else:
            hi, step = finger - 1, 1
            while hi - step >= 0:
                comparisons += 1
                if run[hi - step] < x:
                    break
                hi -= step
                step <<= 1
            lo = max(hi - step + 1, 0)
        # binary search in run[lo:hi]; all of run[:lo] < x <= run[hi:]
        while lo < hi:
            mid = (lo + hi) // 2
            comparisons += 1
            if run[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        run.insert(lo, x)
        inversions += size - lo
        finger = lo + 1
    counters.comparisons += comparisons
    return inversions


def swap_dist(S: Sequence[int], T: Sequence[int], sigma: int | None = None) -> DistanceResult:
    counters = Counters()
    start = time.perf_counter_ns()
    if sigma is None:
        sigma = max(max(S, default=-1), max(T, default=-1)) + 1
    if len(S) != len(T) or parikh(S, sigma) != parikh(T, sigma):
        value = UNREACHABLE
    else:
        pi = build_permutation(S, T, sigma, counters)
        value = count_inversions_adaptive(pi, counters)
    counters.wall_time_ns = time.perf_counter_ns() - start
    return DistanceResult(value, counters)
