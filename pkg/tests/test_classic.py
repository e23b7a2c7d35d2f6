import random

import pytest
from hypothesis import given, settings, strategies as st

from adaptive_edit.classic import classic_di, classic_dir, classic_dr, full_matrix_oracle, lcss_from_di
from adaptive_edit.results import UNREACHABLE, MemoTable, ResourceBudgetError
from conftest import random_pair
from oracles import bfs_edit_distance


@pytest.mark.parametrize("fn, S, T, expected", [
    (classic_di, "", "abc", 3),
    (classic_di, "abc", "abc", 0),
    (classic_di, "ab", "ba", 2),
    (classic_dir, "a", "b", 1),
    (classic_dir, "kitten", "sitting", 3),
    (classic_dir, "", "ab", 2),
    (classic_dr, "ab", "b", 1),
    (classic_dr, "b", "ab", UNREACHABLE),
    (classic_dr, "ab", "cb", 1),
])
def test_examples(fn, S, T, expected):
    assert fn(S, T).value == expected


@pytest.mark.parametrize("S, T, metric, ops", [
    ("ab", "ba", "DI", "DI"),
    ("abc", "abc", "DIR", "DIR"),
    ("aa", "ab", "DR", "DR"),
])
def test_oracle_examples_against_script_enumeration(S, T, metric, ops):
    assert full_matrix_oracle(S, T, metric) == bfs_edit_distance(S, T, ops, max_depth=4)


def test_oracle_budget():
    with pytest.raises(ResourceBudgetError):
        full_matrix_oracle("abc", "abc", "DI", dense_budget=10)


def test_insert_replace_is_reversed_delete_replace():
    # IR from S to T: only inserts and replaces, so S must not be longer
    assert classic_dr("abc", "b").value == 2
    assert bfs_edit_distance("b", "abc", "IR") == 2


@pytest.mark.parametrize("n, m, d, lcss", [(2, 2, 2, 1), (3, 3, 0, 3), (2, 3, 5, 0)])
def test_lcss_from_di(n, m, d, lcss):
    assert lcss_from_di(n, m, d) == lcss


@pytest.mark.parametrize("args", [(2, 2, 1), (2, 2, 5), (1, 1, UNREACHABLE)])
def test_lcss_inconsistent(args):
    with pytest.raises(ArithmeticError):
        lcss_from_di(*args)


def test_classic_counts_like_recursion():
    # ("ab", "ba"): (1,1) mismatch -> (0,1),(1,0); both match into base cells
    r = classic_di("ab", "ba")
    assert r.counters.recursive_calls == 5
    assert r.counters.cells_filled == 3


def test_sparse_and_dense_memo_agree():
    rng = random.Random(1)
    for _ in range(50):
        _, S, T = random_pair(rng, 4, 20)
        assert classic_dir(S, T, dense_budget=None).value == classic_dir(S, T).value


def test_memo_is_write_once():
    memo = MemoTable(2, 2)
    memo.put(0, 1, 3)
    memo.put(0, 1, 3)
    with pytest.raises(RuntimeError):
        memo.put(0, 1, 4)
    memo.put(1, 1, UNREACHABLE)
    assert memo.get(1, 1) is UNREACHABLE
    assert memo.get(1, 0) is None


def test_deep_inputs_do_not_overflow_the_stack():
    S = [0] * 5000
    assert classic_di(S, S).value == 0
    assert classic_dr(S, [0] * 4990).value == 10


@pytest.mark.slow
def test_classic_equals_oracle_on_random_pairs():
    rng = random.Random(7)
    for _ in range(1000):
        _, S, T = random_pair(rng, 8, 30)
        assert classic_di(S, T).value == full_matrix_oracle(S, T, "DI")
        assert classic_dir(S, T).value == full_matrix_oracle(S, T, "DIR")
        assert classic_dr(S, T).value == full_matrix_oracle(S, T, "DR")


words = st.lists(st.integers(0, 3), max_size=12)


@given(words, words)
def test_symmetry_and_bounds(S, T):
    di = classic_di(S, T).value
    assert di == classic_di(T, S).value
    assert di <= len(S) + len(T)
    assert classic_dir(S, T).value <= max(len(S), len(T))
    dr = classic_dr(S, T).value
    if dr is UNREACHABLE:
        assert len(S) < len(T)
    else:
        assert dr <= len(S)


@settings(max_examples=200)
@given(words, words, words)
def test_levenshtein_triangle(S, T, U):
    d = lambda a, b: classic_dir(a, b).value
    assert d(S, T) <= d(S, U) + d(U, T)


@given(st.lists(st.integers(0, 1), max_size=4), st.lists(st.integers(0, 1), max_size=4))
def test_oracle_matches_script_enumeration(S, T):
    for metric in ("DI", "DIR", "DR"):
        expected = bfs_edit_distance(S, T, metric, max_depth=8)
        got = full_matrix_oracle(S, T, metric)
        assert got == (UNREACHABLE if expected is None else expected)
