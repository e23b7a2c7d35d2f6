"""Classic memoized dynamic programs for the DI, DIR and DR distances.

Cells are 0-indexed: ``d(i, j)`` is the distance between ``S[0..i]`` and
``T[0..j]``. Memoized recursion is driven by an explicit stack, so depth is
not limited by the interpreter, while ``recursive_calls`` still counts every
request a recursive implementation would make.

The module also holds the bottom-up full-matrix oracle and LCSS recovery.
"""

from __future__ import annotations

import time
from typing import Callable, Sequence

from .results import (
    DEFAULT_DENSE_BUDGET,
    UNREACHABLE,
    Counters,
    DistanceResult,
    MemoTable,
    ResourceBudgetError,
)

METRICS = ("DI", "DIR", "DR")


def base_di(i: int, j: int):
    """Boundary value for DI/DIR, or ``None`` inside the matrix."""
    if j < 0:
        return i + 1
    if i < 0:
        return j + 1
    return None


def base_dr(i: int, j: int):
    # delete and replace never lengthen the source
    if i < j:
        return UNREACHABLE
    if j < 0:
        return i + 1
    return None


def evaluate(n: int, m: int, plan: Callable, base: Callable, memo: MemoTable, counters: Counters):
    """Memoized evaluation of cell ``(n-1, m-1)``.

    ``plan(i, j)`` returns the candidate list ``[(cost, (ci, cj)), ...]`` for a
    non-base cell; its value is ``min(cost + d(ci, cj))``. ``plan`` runs once
    per filled cell, so index queries inside it are counted once.
    """
    counters.recursive_calls += 1
    top = base(n - 1, m - 1)
    if top is not None:
        return top

    plans: dict = {}
    stack = [(n - 1, m - 1)]
    get, put = memo.get, memo.put
    while stack:
        i, j = stack[-1]
        if get(i, j) is not None:
            stack.pop()
            continue
        cands = plans.get((i, j))
        if cands is None:
            cands = plan(i, j)
            plans[(i, j)] = cands
        pending = [c for _, c in cands if base(*c) is None and get(*c) is None]
        if pending:
            stack.extend(reversed(pending))
            continue
        best = None
        for cost, c in cands:
            v = base(*c)
            if v is None:
                v = get(*c)
            v = cost + v
            if best is None or v < best:
                best = v
        put(i, j, best)
        del plans[(i, j)]
        counters.recursive_calls += len(cands)
        counters.cells_filled += 1
        stack.pop()
    return get(n - 1, m - 1)


def _run(S, T, plan_factory, base, dense_budget, sparse=False) -> DistanceResult:
    counters = Counters()
    start = time.perf_counter_ns()
    memo = MemoTable(len(S), len(T), dense_budget, sparse=sparse)
    value = evaluate(len(S), len(T), plan_factory(S, T), base, memo, counters)
    counters.wall_time_ns = time.perf_counter_ns() - start
    return DistanceResult(value, counters)


def _plan_di(S, T):
    def plan(i, j):
        if S[i] == T[j]:
            return ((0, (i - 1, j - 1)),)
        return ((1, (i - 1, j)), (1, (i, j - 1)))
    return plan


def _plan_dir(S, T):
    def plan(i, j):
        if S[i] == T[j]:
            return ((0, (i - 1, j - 1)),)
        return ((1, (i - 1, j)), (1, (i, j - 1)), (1, (i - 1, j - 1)))
    return plan


def _plan_dr(S, T):
    def plan(i, j):
        if S[i] == T[j]:
            return ((0, (i - 1, j - 1)),)
        return ((1, (i - 1, j)), (1, (i - 1, j - 1)))
    return plan


def classic_di(S: Sequence, T: Sequence, dense_budget: int | None = DEFAULT_DENSE_BUDGET) -> DistanceResult:
    """Delete-Insert distance; LCSS follows via :func:`lcss_from_di`."""
    return _run(S, T, _plan_di, base_di, dense_budget)


def classic_dir(S: Sequence, T: Sequence, dense_budget: int | None = DEFAULT_DENSE_BUDGET) -> DistanceResult:
    """Levenshtein distance."""
    return _run(S, T, _plan_dir, base_di, dense_budget)


def classic_dr(S: Sequence, T: Sequence, dense_budget: int | None = DEFAULT_DENSE_BUDGET) -> DistanceResult:
    """Delete-Replace distance from S to T, ``UNREACHABLE`` when ``len(S) < len(T)``.

    The Insert-Replace distance from S to T is ``classic_dr(T, S)``.
    """
    return _run(S, T, _plan_dr, base_dr, dense_budget)


def full_matrix_oracle(S: Sequence, T: Sequence, metric: str, dense_budget: int | None = DEFAULT_DENSE_BUDGET):
    """Bottom-up dense DP over prefix lengths; never touches an index."""
    metric = metric.upper()
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    n, m = len(S), len(T)
    if dense_budget is not None and (n + 1) * (m + 1) > dense_budget:
        raise ResourceBudgetError(f"{(n + 1) * (m + 1)} cells exceed the dense budget of {dense_budget}")

    if metric == "DR":
        prev = [0] + [UNREACHABLE] * m
    else:
        prev = list(range(m + 1))
    for i in range(1, n + 1):
        cur = [i] + [UNREACHABLE] * m
        a = S[i - 1]
        for j in range(1, m + 1):
            same = a == T[j - 1]
            if metric == "DI":
                cur[j] = prev[j - 1] if same else 1 + min(prev[j], cur[j - 1])
            elif metric == "DIR":
                cur[j] = min(prev[j - 1] + (0 if same else 1), prev[j] + 1, cur[j - 1] + 1)
            else:
                cur[j] = min(prev[j - 1] + (0 if same else 1), prev[j] + 1)
        prev = cur
    return prev[m]


def lcss_from_di(n: int, m: int, d_di: int) -> int:
    """Length of a longest common subsequence from the DI distance."""
    if d_di is UNREACHABLE or d_di < 0 or d_di > n + m or (n + m - d_di) % 2:
        raise ArithmeticError(f"inconsistent DI distance {d_di} for lengths {n}, {m}")
    return (n + m - d_di) // 2
