"""Rank/select indices over symbol strings.

``PostingListIndex`` keeps one sorted position list per symbol: select is an
array access, rank a doubling search. ``ScanIndex`` answers the same queries
by scanning and exists as a testing baseline.

Positions are 0-indexed. ``rank(a, i)`` counts occurrences of ``a`` in
``s[0..i]`` inclusive (0 for ``i == -1``); ``select(a, k)`` is the position of
the ``k``-th occurrence (``k >= 1``) or ``None``.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Sequence

from .results import Counters


def _check_symbol(a: int, sigma: int) -> None:
    if not 0 <= a < sigma:
        raise ValueError(f"symbol {a} outside alphabet of size {sigma}")


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"select takes a 1-indexed occurrence count, got {k}")


def gallop_rank(lst: Sequence[int], x: int, finger: int) -> int:
    """Number of entries ``<= x`` in sorted ``lst``, searching outward from ``finger``.

    Cost is logarithmic in the distance between ``finger`` and the answer.
    """
    size = len(lst)
    if finger < 0 or finger > size:
        return bisect_right(lst, x)
    if finger < size and lst[finger] <= x:
        # answer lies right of finger
        lo, step = finger, 1
        while lo + step < size and lst[lo + step] <= x:
            lo += step
            step <<= 1
        return bisect_right(lst, x, lo + 1, min(lo + step, size))
    # answer is <= finger
    hi, step = finger, 1
    while hi - step >= 0 and lst[hi - step] > x:
        hi -= step
        step <<= 1
    return bisect_right(lst, x, max(hi - step, 0), hi)


class ScanIndex:
    def __init__(self, s: Sequence[int], sigma: int):
        self.s = tuple(s)
        self.sigma = sigma

    def __len__(self):
        return len(self.s)

    def rank(self, a: int, i: int) -> int:
        _check_symbol(a, self.sigma)
        return sum(1 for x in self.s[: i + 1] if x == a)

    def select(self, a: int, k: int) -> int | None:
        _check_symbol(a, self.sigma)
        _check_k(k)
        seen = 0
        for pos, x in enumerate(self.s):
            if x == a:
                seen += 1
                if seen == k:
                    return pos
        return None


class PostingListIndex:
    """Immutable posting-list index; share freely across computations."""

    def __init__(self, s: Sequence[int], sigma: int):
        postings: list[list[int]] = [[] for _ in range(sigma)]
        for pos, a in enumerate(s):
            _check_symbol(a, sigma)
            postings[a].append(pos)
        self.postings = tuple(tuple(p) for p in postings)
        self.s = tuple(s)
        self.sigma = sigma

    def __len__(self):
        return len(self.s)

    def __getitem__(self, i):
        return self.s[i]

    def count(self, a: int) -> int:
        return len(self.postings[a])

    def rank(self, a: int, i: int) -> int:
        _check_symbol(a, self.sigma)
        if i < 0:
            return 0
        return bisect_right(self.postings[a], i)

    def select(self, a: int, k: int) -> int | None:
        _check_symbol(a, self.sigma)
        _check_k(k)
        lst = self.postings[a]
        return lst[k - 1] if k <= len(lst) else None

    def cursor(self, counters: Counters | None = None) -> "RankSelectCursor":
        return RankSelectCursor(self, counters if counters is not None else Counters())


def build_index(s: Sequence[int], sigma: int) -> PostingListIndex:
    return PostingListIndex(s, sigma)


class RankSelectCursor:
    """Per-computation view of an index: holds the rank fingers and counts queries.

    Each symbol remembers where its previous rank answer landed; the next rank
    on that symbol gallops from there, so monotone query sequences cost
    ``O(q lg(n_a / q))`` in total.
    """

    __slots__ = ("index", "counters", "_fingers", "_postings", "sigma")

    def __init__(self, index: PostingListIndex, counters: Counters):
        self.index = index
        self.counters = counters
        self.sigma = index.sigma
        self._postings = index.postings
        self._fingers = [-1] * index.sigma

    def rank(self, a: int, i: int) -> int:
        self.counters.rank_ops += 1
        if not 0 <= a < self.sigma:
            raise ValueError(f"symbol {a} outside alphabet of size {self.sigma}")
        if i < 0:
            return 0
        r = gallop_rank(self._postings[a], i, self._fingers[a])
        self._fingers[a] = r
        return r

    def select(self, a: int, k: int) -> int | None:
        self.counters.select_ops += 1
        if not 0 <= a < self.sigma:
            raise ValueError(f"symbol {a} outside alphabet of size {self.sigma}")
        _check_k(k)
        lst = self._postings[a]
        return lst[k - 1] if k <= len(lst) else None
