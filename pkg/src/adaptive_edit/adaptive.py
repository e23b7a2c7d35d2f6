"""Indexed adaptive recurrences for the DI, DIR and DR distances.

At a mismatching cell ``(i, j)`` with ``s = S[i]`` and ``t = T[j]``, rank
tells whether ``t`` still occurs in ``S[0..i]`` (and ``s`` in ``T[0..j]``).
When it does not, the symbol can only be inserted (deleted), so the
recurrence steps straight past it. When it does, select finds its last
occurrence ``p`` and the recurrence jumps there at cost ``i - p`` instead of
walking the ``i - p`` intermediate cells.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .classic import base_di, base_dr, evaluate
from .rank_select import PostingListIndex, RankSelectCursor
from .results import Counters, DistanceResult, MemoTable
from .text_model import parikh


@dataclass
class AdaptiveContext:
    """Indices, sparse memo and counters of one adaptive computation."""

    source: RankSelectCursor
    target: RankSelectCursor
    memo: MemoTable
    counters: Counters = field(default_factory=Counters)

    @classmethod
    def build(cls, S: Sequence[int], T: Sequence[int], sigma: int | None = None,
              source_index: PostingListIndex | None = None,
              target_index: PostingListIndex | None = None) -> "AdaptiveContext":
        if sigma is None:
            sigma = max(max(S, default=-1), max(T, default=-1)) + 1
        counters = Counters()
        si = source_index if source_index is not None else PostingListIndex(S, sigma)
        ti = target_index if target_index is not None else PostingListIndex(T, sigma)
        return cls(si.cursor(counters), ti.cursor(counters),
                   MemoTable(len(S), len(T), sparse=True), counters)


def _plan_di(S, T, ctx):
    rank_S, rank_T = ctx.source.rank, ctx.target.rank
    select_S, select_T = ctx.source.select, ctx.target.select

    def plan(i, j):
        s, t = S[i], T[j]
        rank_s = rank_S(t, i)
        rank_t = rank_T(s, j)
        if s == t:
            return ((0, (i - 1, j - 1)),)
        if rank_s == 0 and rank_t == 0:
            return ((2, (i - 1, j - 1)),)
        if rank_s == 0:
            return ((1, (i, j - 1)),)
        if rank_t == 0:
            return ((1, (i - 1, j)),)
        p_s = select_S(t, rank_s)
        p_t = select_T(s, rank_t)
        return (
            (2, (i - 1, j - 1)),
            (i - p_s, (p_s - 1, j - 1)),
            (j - p_t, (i - 1, p_t - 1)),
        )
    return plan


def _plan_dir(S, T, ctx):
    rank_S, rank_T = ctx.source.rank, ctx.target.rank
    select_S, select_T = ctx.source.select, ctx.target.select

    def plan(i, j):
        s, t = S[i], T[j]
        rank_s = rank_S(t, i)
        rank_t = rank_T(s, j)
        if s == t:
            return ((0, (i - 1, j - 1)),)
        replace = (1, (i - 1, j - 1))
        if rank_s == 0 and rank_t == 0:
            return (replace,)
        if rank_s == 0:
            p_t = select_T(s, rank_t)
            return (replace, (j - p_t, (i - 1, p_t - 1)))
        if rank_t == 0:
            p_s = select_S(t, rank_s)
            return (replace, (i - p_s, (p_s - 1, j - 1)))
        p_s = select_S(t, rank_s)
        p_t = select_T(s, rank_t)
        return (replace, (i - p_s, (p_s - 1, j - 1)), (j - p_t, (i - 1, p_t - 1)))
    return plan


def _plan_dr(S, T, ctx):
    rank_S, select_S = ctx.source.rank, ctx.source.select

    def plan(i, j):
        s, t = S[i], T[j]
        rank_s = rank_S(t, i)
        if s == t:
            return ((0, (i - 1, j - 1)),)
        replace = (1, (i - 1, j - 1))
        if rank_s == 0:
            return (replace,)
        p_s = select_S(t, rank_s)
        return (replace, (i - p_s, (p_s - 1, j - 1)))
    return plan


def _run(S, T, ctx, plan_factory, base) -> DistanceResult:
    if ctx is None:
        ctx = AdaptiveContext.build(S, T)
    start = time.perf_counter_ns()
    value = evaluate(len(S), len(T), plan_factory(S, T, ctx), base, ctx.memo, ctx.counters)
    ctx.counters.wall_time_ns += time.perf_counter_ns() - start
    return DistanceResult(value, ctx.counters)


def adaptive_di(S: Sequence[int], T: Sequence[int], ctx: AdaptiveContext | None = None) -> DistanceResult:
    """Delete-Insert distance through rank/select jumps."""
    return _run(S, T, ctx, _plan_di, base_di)


def adaptive_dir(S: Sequence[int], T: Sequence[int], ctx: AdaptiveContext | None = None) -> DistanceResult:
    """Levenshtein distance through rank/select jumps; replace is always a candidate."""
    return _run(S, T, ctx, _plan_dir, base_di)


def adaptive_dr(S: Sequence[int], T: Sequence[int], ctx: AdaptiveContext | None = None) -> DistanceResult:
    """Delete-Replace distance; only the source index is queried."""
    return _run(S, T, ctx, _plan_dr, base_dr)


def call_envelope(S: Sequence[int], T: Sequence[int], sigma: int | None = None) -> int:
    """Measured upper envelope ``4 * sum_a n_a m_a + 2(n + m) + 4`` on recursive calls."""
    if sigma is None:
        sigma = max(max(S, default=-1), max(T, default=-1)) + 1
    cross = sum(a * b for a, b in zip(parikh(S, sigma), parikh(T, sigma)))
    return 4 * cross + 2 * (len(S) + len(T)) + 4
