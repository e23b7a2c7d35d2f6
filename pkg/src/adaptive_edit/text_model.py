"""Tokenization, joint alphabets and Parikh-vector statistics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

TOKENIZE_MODES = ("words", "bytes")


class TokenizeError(ValueError):
    """Raised when input text cannot be decoded in ``words`` mode."""

    def __init__(self, offset: int, reason: str):
        super().__init__(f"invalid UTF-8 at byte offset {offset}: {reason}")
        self.offset = offset


def tokenize(text: bytes | str, mode: str = "words", truncate_bytes: int | None = None) -> list:
    """Split ``text`` into tokens.

    In ``words`` mode a token is a maximal run of alphanumeric characters and
    anything else separates tokens. In ``bytes`` mode every byte is a token
    (an ``int`` in ``0..255``). ``truncate_bytes`` cuts the raw input before
    tokenizing, so a word straddling the cut is shortened, not dropped.
    """
    if mode not in TOKENIZE_MODES:
        raise ValueError(f"unknown tokenize mode {mode!r}")
    if isinstance(text, str):
        text = text.encode("utf-8")
    if truncate_bytes is not None:
        if truncate_bytes < 0:
            raise ValueError("truncate_bytes must be non-negative")
        text = text[:truncate_bytes]
    if mode == "bytes":
        return list(text)

    try:
        decoded = text.decode("utf-8")
    except UnicodeDecodeError as exc:
        # a multi-byte character cut by truncation is not an encoding error
        if truncate_bytes is not None and exc.start >= len(text) - 3 and exc.reason == "unexpected end of data":
            decoded = text[: exc.start].decode("utf-8")
        else:
            raise TokenizeError(exc.start, exc.reason) from exc

    tokens = []
    start = None
    for pos, ch in enumerate(decoded):
        if ch.isalnum():
            if start is None:
                start = pos
        elif start is not None:
            tokens.append(decoded[start:pos])
            start = None
    if start is not None:
        tokens.append(decoded[start:])
    return tokens


@dataclass(frozen=True)
class Alphabet:
    tokens: tuple

    @property
    def size(self) -> int:
        return len(self.tokens)

    def __len__(self):
        return len(self.tokens)


def build_alphabet(tokens_a: Sequence, tokens_b: Sequence) -> tuple[Alphabet, tuple[int, ...], tuple[int, ...]]:
    """Map both token lists onto one alphabet, ids in first-appearance order (A then B)."""
    ids: dict = {}
    for tok in tokens_a:
        if tok not in ids:
            ids[tok] = len(ids)
    for tok in tokens_b:
        if tok not in ids:
            ids[tok] = len(ids)
    alphabet = Alphabet(tuple(ids))
    return alphabet, tuple(ids[t] for t in tokens_a), tuple(ids[t] for t in tokens_b)


def parikh(s: Sequence[int], sigma: int) -> tuple[int, ...]:
    """Occurrence count of every symbol ``0..sigma-1`` in ``s``."""
    counts = [0] * sigma
    for a in s:
        if not 0 <= a < sigma:
            raise ValueError(f"symbol {a} outside alphabet of size {sigma}")
        counts[a] += 1
    return tuple(counts)


@dataclass(frozen=True)
class PairStats:
    """Parikh-vector statistics of a (source, target) pair.

    ``gamma`` is ``max_a min(n_a, m_a - n_a)`` taken as is, so it goes
    negative when the source holds more copies of every symbol than the target.
    """

    cross_sum: int
    gamma: int
    n_prime: int
    m_prime: int


def pair_stats(p_source: Sequence[int], p_target: Sequence[int]) -> PairStats:
    if len(p_source) != len(p_target):
        raise ValueError(f"Parikh vectors differ in dimension: {len(p_source)} != {len(p_target)}")
    cross = sum(a * b for a, b in zip(p_source, p_target))
    gamma = max((min(a, b - a) for a, b in zip(p_source, p_target)), default=0)
    n_prime = sum(a for a, b in zip(p_source, p_target) if b > 0)
    m_prime = sum(b for a, b in zip(p_source, p_target) if a > 0)
    return PairStats(cross, gamma, n_prime, m_prime)
