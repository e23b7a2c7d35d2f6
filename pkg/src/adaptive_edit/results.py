"""Distance values, instrumentation counters and memo storage shared by all algorithms."""

from __future__ import annotations

from array import array
from dataclasses import asdict, dataclass, field

DEFAULT_DENSE_BUDGET = 10**8


class ResourceBudgetError(MemoryError):
    """The requested dense matrix exceeds the configured cell budget."""


class _Unreachable:
    """Distance of an instance no operator sequence can solve.

    Absorbing under addition and larger than every integer, so ``min`` and
    ``+`` work without sentinel arithmetic.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNREACHABLE"

    def __str__(self):
        return "inf"

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("UNREACHABLE")

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


def is_finite(d) -> bool:
    return d is not UNREACHABLE


@dataclass
class Counters:
    """Work counters of one computation.

    ``recursive_calls`` counts every cell-evaluation request, base cases and
    memo hits included, exactly as function entries of a memoized recursion.
    ``cells_filled`` counts cells whose value was computed (not base cases).
    """

    recursive_calls: int = 0
    rank_ops: int = 0
    select_ops: int = 0
    cells_filled: int = 0
    comparisons: int = 0
    wall_time_ns: int = 0

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class DistanceResult:
    value: object
    counters: Counters = field(default_factory=Counters)

    @property
    def finite(self) -> bool:
        return self.value is not UNREACHABLE


class MemoTable:
    """Cell memo keyed by ``(i, j)`` with ``0 <= i < n`` and ``0 <= j < m``.

    Dense mode keeps a flat ``array`` when ``n*m`` fits the budget, sparse
    mode a dict. Entries are write-once.
    """

    _EMPTY = -1
    _UNREACH = -2

    def __init__(self, n: int, m: int, dense_budget: int | None = DEFAULT_DENSE_BUDGET, sparse: bool = False):
        self.n, self.m = n, m
        self.dense = not sparse and dense_budget is not None and n * m <= dense_budget
        if self.dense:
            typecode = "i" if n + m < 2**31 - 1 else "q"
            self._cells = array(typecode, [self._EMPTY]) * (n * m)
        else:
            self._cells = {}

    def get(self, i: int, j: int):
        """Stored value of cell ``(i, j)`` or ``None``."""
        key = i * self.m + j
        if self.dense:
            v = self._cells[key]
            if v == self._EMPTY:
                return None
            return UNREACHABLE if v == self._UNREACH else v
        return self._cells.get(key)

    def put(self, i: int, j: int, value) -> None:
        old = self.get(i, j)
        if old is not None and old != value:
            raise RuntimeError(f"memo cell ({i}, {j}) rewritten: {old} -> {value}")
        key = i * self.m + j
        if self.dense:
            self._cells[key] = self._UNREACH if value is UNREACHABLE else value
        else:
            self._cells[key] = value

    def __len__(self):
        if self.dense:
            return sum(1 for v in self._cells if v != self._EMPTY)
        return len(self._cells)
