"""Experiment runner: one Report per (pair, metric, algorithm), CSV and JSON output."""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from . import adaptive, banded, classic, swap
from .rank_select import PostingListIndex
from .results import DEFAULT_DENSE_BUDGET, UNREACHABLE, Counters, DistanceResult, ResourceBudgetError
from .text_model import build_alphabet, pair_stats, parikh, tokenize

log = logging.getLogger(__name__)

METRICS = ("di", "dir", "dr", "ir", "swap")
ALGORITHMS = ("classic", "adaptive", "banded")
PRESET_TRUNCATE_BYTES = 32768

CSV_COLUMNS = (
    "source", "target", "metric", "algorithm", "n", "m", "sigma", "cross_sum", "gamma",
    "distance", "recursive_calls", "rank_ops", "select_ops", "cells_filled", "comparisons",
    "wall_time_ns", "error",
)
_COUNTER_COLUMNS = ("recursive_calls", "rank_ops", "select_ops", "cells_filled", "comparisons", "wall_time_ns")
_INT_COLUMNS = ("n", "m", "sigma", "cross_sum", "gamma") + _COUNTER_COLUMNS


class InputError(OSError):
    """An input file could not be read or decoded."""


@dataclass
class Report:
    source: str
    target: str
    metric: str
    algorithm: str
    n: int | None = None
    m: int | None = None
    sigma: int | None = None
    cross_sum: int | None = None
    gamma: int | None = None
    distance: object = None
    counters: Counters = field(default_factory=Counters)
    error: str = ""

    def to_row(self) -> dict:
        row = {
            "source": self.source, "target": self.target, "metric": self.metric,
            "algorithm": self.algorithm, "n": self.n, "m": self.m, "sigma": self.sigma,
            "cross_sum": self.cross_sum, "gamma": self.gamma,
            "distance": _distance_text(self.distance), "error": self.error,
        }
        row.update(self.counters.as_dict())
        return {k: ("" if row[k] is None else row[k]) for k in CSV_COLUMNS}

    def to_json(self) -> dict:
        d = {k: v for k, v in self.to_row().items() if k not in _COUNTER_COLUMNS}
        for k in _INT_COLUMNS[:5]:
            d[k] = getattr(self, k)
        d["distance"] = _distance_json(self.distance)
        d["counters"] = self.counters.as_dict()
        return d

    @classmethod
    def from_json(cls, d: dict) -> "Report":
        dist = d["distance"]
        if dist is None:
            value = None
        elif dist["kind"] == "unreachable":
            value = UNREACHABLE
        else:
            value = dist["value"]
        return cls(d["source"], d["target"], d["metric"], d["algorithm"], d["n"], d["m"], d["sigma"],
                   d["cross_sum"], d["gamma"], value, Counters(**d["counters"]), d["error"])

    @classmethod
    def from_row(cls, row: dict) -> "Report":
        def num(k):
            return int(row[k]) if row[k] != "" else None
        dist = row["distance"]
        value = None if dist == "" else UNREACHABLE if dist == "inf" else int(dist)
        counters = Counters(**{k: int(row[k] or 0) for k in _COUNTER_COLUMNS})
        return cls(row["source"], row["target"], row["metric"], row["algorithm"], num("n"), num("m"),
                   num("sigma"), num("cross_sum"), num("gamma"), value, counters, row["error"])


def _distance_text(d) -> str:
    if d is None:
        return ""
    return "inf" if d is UNREACHABLE else str(d)


def _distance_json(d):
    if d is None:
        return None
    if d is UNREACHABLE:
        return {"kind": "unreachable"}
    return {"kind": "finite", "value": d}


def compute(S: Sequence[int], T: Sequence[int], sigma: int, metric: str, algorithm: str,
            dense_budget: int | None = DEFAULT_DENSE_BUDGET) -> DistanceResult:
    """Dispatch one distance computation over symbol-id strings.

    ``ir`` is the Insert-Replace distance from S to T, i.e. Delete-Replace
    from T to S. For ``swap``, ``classic`` counts inversions of the
    occurrence mapping pairwise and ``adaptive`` uses local insertion sort.

    Raises ``ResourceBudgetError`` when a classic run would need more than
    ``dense_budget`` memo cells.
    """
    metric, algorithm = metric.lower(), algorithm.lower()
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    if metric == "ir":
        S, T, metric = T, S, "dr"

    if metric == "swap":
        if algorithm == "banded":
            raise ValueError("swap distance has no banded algorithm")
        if algorithm == "adaptive":
            return swap.swap_dist(S, T, sigma)
        counters = Counters()
        try:
            pi = swap.build_permutation(S, T, sigma, counters)
        except swap.DegenerateInstanceError:
            return DistanceResult(UNREACHABLE, counters)
        return DistanceResult(swap.count_inversions_oracle(pi), counters)

    if algorithm == "classic":
        if dense_budget is not None and len(S) * len(T) > dense_budget:
            raise ResourceBudgetError(
                f"classic {metric} needs {len(S) * len(T)} memo cells, over the budget of {dense_budget}; "
                "use the adaptive or banded algorithm")
        fn = {"di": classic.classic_di, "dir": classic.classic_dir, "dr": classic.classic_dr}[metric]
        return fn(S, T, dense_budget)
    if algorithm == "adaptive":
        ctx = adaptive.AdaptiveContext.build(S, T, sigma, PostingListIndex(S, sigma), PostingListIndex(T, sigma))
        fn = {"di": adaptive.adaptive_di, "dir": adaptive.adaptive_dir, "dr": adaptive.adaptive_dr}[metric]
        return fn(S, T, ctx)
    return banded.distance_by_doubling(S, T, metric.upper())


def _read(path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc


def run_pair(source, target, metric: str, algorithm: str, tokenize_mode: str = "words",
             truncate: int | None = None, dense_budget: int | None = DEFAULT_DENSE_BUDGET) -> Report:
    """Tokenize both files, build the joint alphabet and compute one distance."""
    tokens = []
    for path in (source, target):
        try:
            tokens.append(tokenize(_read(path), tokenize_mode, truncate))
        except ValueError as exc:
            raise InputError(f"{path}: {exc}") from exc
    alphabet, S, T = build_alphabet(*tokens)
    sigma = alphabet.size
    stats = pair_stats(parikh(S, sigma), parikh(T, sigma))
    result = compute(S, T, sigma, metric, algorithm, dense_budget)
    return Report(str(source), str(target), metric.lower(), algorithm.lower(), len(S), len(T), sigma,
                  stats.cross_sum, stats.gamma, result.value, result.counters)


def read_manifest(path) -> list[tuple[str, str]]:
    """Pairs from a CSV with columns ``source_path,target_path``.

    Relative paths are taken relative to the manifest's directory.
    """
    base = Path(path).parent
    text = _read(path).decode("utf-8")
    rows = list(csv.DictReader(io.StringIO(text)))
    pairs = []
    for lineno, row in enumerate(rows, start=2):
        try:
            src, tgt = row["source_path"].strip(), row["target_path"].strip()
        except (KeyError, AttributeError):
            raise ValueError(f"{path}:{lineno}: manifest rows need source_path and target_path") from None
        pairs.append(tuple(str(p if Path(p).is_absolute() else base / p) for p in (src, tgt)))
    return pairs


def run_experiment(pairs: Iterable[tuple[str, str]], metrics: Sequence[str] = ("di", "dir", "dr"),
                   algorithms: Sequence[str] = ("classic", "adaptive"), out=None, *,
                   tokenize_mode: str = "words", truncate: int | None = None,
                   dense_budget: int | None = DEFAULT_DENSE_BUDGET, keep_going: bool = True,
                   jobs: int = 1) -> list[Report]:
    """Run every (pair, metric, algorithm) and optionally write ``out`` as CSV + JSON.

    Rows come in manifest order, then metric, then algorithm. A failing row
    gets its ``error`` column filled; without ``keep_going`` the run stops
    after the first failure.
    """
    tasks = [(s, t, mt, al) for s, t in pairs for mt in metrics for al in algorithms]

    opts = (tokenize_mode, truncate, dense_budget)

    reports: list[Report] = []
    if jobs > 1 and keep_going:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_task, tasks, [opts] * len(tasks)))
    else:
        for task in tasks:
            rep = _run_task(task, opts)
            reports.append(rep)
            if rep.error and not keep_going:
                break
    if out is not None:
        write_reports(reports, out)
    return reports


def _run_task(task, opts):
    s, t, mt, al = task
    try:
        return run_pair(s, t, mt, al, *opts)
    except (InputError, ResourceBudgetError, ValueError) as exc:
        log.warning("%s vs %s [%s/%s] failed: %s", s, t, mt, al, exc)
        return Report(str(s), str(t), mt, al, error=f"{type(exc).__name__}: {exc}")


def reports_to_csv(reports: Iterable[Report]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.to_row())
    return buf.getvalue()


def reports_from_csv(text: str) -> list[Report]:
    return [Report.from_row(row) for row in csv.DictReader(io.StringIO(text))]


def write_reports(reports: Sequence[Report], out) -> tuple[Path, Path]:
    """Write ``<out>.csv`` and ``<out>.json`` (any suffix on ``out`` is replaced)."""
    out = Path(out)
    csv_path, json_path = out.with_suffix(".csv"), out.with_suffix(".json")
    if out.parent:
        out.parent.mkdir(parents=True, exist_ok=True)
    csv_path.write_text(reports_to_csv(reports))
    json_path.write_text(json.dumps([r.to_json() for r in reports], indent=2) + "\n")
    return csv_path, json_path
