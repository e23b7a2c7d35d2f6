"""Edit distances computed by classic and rank/select-indexed adaptive dynamic programs."""

from .adaptive import AdaptiveContext, adaptive_di, adaptive_dir, adaptive_dr, call_envelope
from .banded import banded_check, di_projected_doubling, distance_by_doubling, project_effective
from .classic import classic_di, classic_dir, classic_dr, full_matrix_oracle, lcss_from_di
from .rank_select import PostingListIndex, RankSelectCursor, ScanIndex, build_index
from .results import UNREACHABLE, Counters, DistanceResult, MemoTable, ResourceBudgetError
from .swap import build_permutation, count_inversions_adaptive, count_inversions_oracle, swap_dist
from .text_model import Alphabet, PairStats, build_alphabet, pair_stats, parikh, tokenize

__all__ = [
    "AdaptiveContext", "Alphabet", "Counters", "DistanceResult", "MemoTable", "PairStats",
    "PostingListIndex", "RankSelectCursor", "ResourceBudgetError", "ScanIndex", "UNREACHABLE",
    "adaptive_di", "adaptive_dir", "adaptive_dr", "banded_check", "build_alphabet", "build_index",
    "build_permutation", "call_envelope", "classic_di", "classic_dir", "classic_dr",
    "count_inversions_adaptive", "count_inversions_oracle", "di_projected_doubling",
    "distance_by_doubling", "full_matrix_oracle", "lcss_from_di", "pair_stats", "parikh",
    "project_effective", "swap_dist", "tokenize",
]
