"""
Fixed-point-free involutions of ``[2n] = {1, ..., 2n}``.

An element is stored by its one-line word ``(x(1), ..., x(2n))``; everything
public is 1-based.  The bracket (arc) form ``[a_1,b_1]...[a_n,b_n]`` is derived
on demand.

>>> x = parse("(1,6)(2,5)(3,8)(4,7)")
>>> x.word
(6, 5, 8, 7, 2, 1, 4, 3)
>>> crossings(x), inversions(x), modified_inversions(x), length(x), ds_length(x)
(4, 20, 8, 8, 8)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from math import comb, prod
from typing import Iterator, Sequence

from .config import DEFAULT_ENUMERATION_CAP
from .errors import (
    EnumerationLimitError,
    InvalidInvolutionError,
    InvariantError,
    MalformedBracketError,
    ParseError,
)

__all__ = [
    "FpfInvolution", "BracketSequence",
    "enumerate_fpf", "count_fpf", "to_brackets", "from_brackets",
    "crossings", "inversions", "modified_inversions", "length", "ds_length",
    "minimum", "maximum", "parse", "format_cycles", "format_brackets",
]


@dataclass(frozen=True, order=True)
class FpfInvolution:
    """A fixed-point-free involution given by its one-line word (1-based values)."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        object.__setattr__(self, "word", word)
        m = len(word)
        if m == 0 or m % 2:
            raise InvalidInvolutionError(f"word length must be positive and even, got {m}")
        if sorted(word) != list(range(1, m + 1)):
            raise InvalidInvolutionError(f"{word} is not a permutation of 1..{m}")
        for i, v in enumerate(word, 1):
            if v == i:
                raise InvalidInvolutionError(f"{word} fixes {i}")
            if word[v - 1] != i:
                raise InvalidInvolutionError(f"{word} is not an involution at {i}")

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, v) for i, v in enumerate(self.word, 1) if i < v)

    def brackets(self) -> "BracketSequence":
        return BracketSequence(self.pairs)

    def __str__(self):
        return format_cycles(self)

    def __repr__(self):
        return f"FpfInvolution({format_cycles(self)!r})"


@dataclass(frozen=True)
class BracketSequence:
    """Canonical transposition expression ``[a_1,b_1]...[a_n,b_n]`` with ``a_1 < ... < a_n``."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise MalformedBracketError("empty bracket sequence")
        for a, b in pairs:
            if not a < b:
                raise MalformedBracketError(f"bracket [{a},{b}] needs a < b")
        firsts = [a for a, _ in pairs]
        if any(s >= t for s, t in zip(firsts, firsts[1:])):
            raise MalformedBracketError(f"first coordinates {firsts} are not strictly increasing")
        entries = sorted(v for p in pairs for v in p)
        if entries != list(range(1, 2 * len(pairs) + 1)):
            raise MalformedBracketError(f"brackets {pairs} do not partition 1..{2 * len(pairs)}")

    @property
    def n(self) -> int:
        return len(self.pairs)

    def __str__(self):
        return "".join(f"[{a},{b}]" for a, b in self.pairs)


def count_fpf(n: int) -> int:
    """``(2n-1)!!``."""
    return prod(range(1, 2 * n, 2))


def enumerate_fpf(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[FpfInvolution]:
    """All fixed-point-free involutions of ``[2n]`` in lexicographic order of the one-line word."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > cap:
        raise EnumerationLimitError(f"enumeration at n={n}", cap)
    m = 2 * n
    word = [0] * m

    # the smallest unmatched position picks its partner in increasing order,
    # which produces words in lexicographic order
    def loop(free: list[int]) -> Iterator[tuple[int, ...]]:
        if not free:
            yield tuple(word)
            return
        p, rest = free[0], free[1:]
        for k, q in enumerate(rest):
            word[p - 1], word[q - 1] = q, p
            yield from loop(rest[:k] + rest[k + 1:])

    return [_trusted(w) for w in loop(list(range(1, m + 1)))]


def _trusted(word: tuple[int, ...]) -> FpfInvolution:
    # skips validation; only for words built by this package
    x = object.__new__(FpfInvolution)
    object.__setattr__(x, "word", word)
    return x


def minimum(n: int) -> FpfInvolution:
    """``j_2n = (1,2)(3,4)...(2n-1,2n)``."""
    return from_pairs([(2 * t - 1, 2 * t) for t in range(1, n + 1)])


def maximum(n: int) -> FpfInvolution:
    """``w_0 = (1,2n)(2,2n-1)...``."""
    return FpfInvolution(tuple(range(2 * n, 0, -1)))


def from_pairs(pairs: Sequence[tuple[int, int]]) -> FpfInvolution:
    """Build an involution from disjoint transpositions in any order."""
    m = 2 * len(pairs)
    word = [0] * m
    for a, b in pairs:
        if not (1 <= a <= m and 1 <= b <= m) or a == b:
            raise InvalidInvolutionError(f"bad transposition ({a},{b}) for 2n={m}")
        if word[a - 1] or word[b - 1]:
            raise InvalidInvolutionError(f"transposition ({a},{b}) overlaps another")
        word[a - 1], word[b - 1] = b, a
    return FpfInvolution(tuple(word))


def to_brackets(x: FpfInvolution) -> BracketSequence:
    return x.brackets()


def from_brackets(b: BracketSequence | Sequence[tuple[int, int]]) -> FpfInvolution:
    if not isinstance(b, BracketSequence):
        b = BracketSequence(tuple(b))
    return from_pairs(b.pairs)


def crossings(x: FpfInvolution) -> int:
    """Number of pairs of arcs ``a_s < a_t < b_s < b_t``."""
    p = x.pairs
    return sum(1 for s in range(len(p)) for t in range(s + 1, len(p))
               if p[s][0] < p[t][0] < p[s][1] < p[t][1])


def _inv(seq: Sequence[int]) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def inversions(x: FpfInvolution) -> int:
    return _inv(x.word)


def modified_inversions(x: FpfInvolution) -> int:
    """Inversions of the interleaved word ``a_1 b_1 a_2 b_2 ... a_n b_n``."""
    return _inv([v for p in x.pairs for v in p])


def length(x: FpfInvolution) -> int:
    """Rank of ``x`` in the Bruhat order on fixed-point-free involutions: ``(inv(x) - n) / 2``."""
    d = inversions(x) - x.n
    if d % 2 or d < 0:
        raise InvariantError(f"inv(x) - n = {d} is not a non-negative even number for {x}")
    return d // 2


def ds_length(x: FpfInvolution) -> int:
    """Deodhar-Srinivasan length ``sum(b_t - a_t - 1) - crossings``."""
    return sum(b - a - 1 for a, b in x.pairs) - crossings(x)


def max_length(n: int) -> int:
    return 2 * comb(n, 2)


# ---- text formats -------------------------------------------------------------

_CYCLE_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")
_BRACKET_RE = re.compile(r"(\d+)\s*-\s*(\d+)")


def format_cycles(x: FpfInvolution) -> str:
    return "".join(f"({a},{b})" for a, b in x.pairs)


def format_brackets(x: FpfInvolution) -> str:
    return ",".join(f"{a}-{b}" for a, b in x.pairs)


def parse(text: str) -> FpfInvolution:
    """
    Parse cycle form ``(1,6)(2,5)`` or bracket form ``1-6,2-5``.

    Whitespace is ignored.  Transpositions may come in any order in cycle form.

    >>> parse(" (1, 3)(2,4) ") == parse("1-3,2-4")
    True
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty involution text")
    if s.startswith("("):
        pairs = _CYCLE_RE.findall(s)
        if "".join(f"({a},{b})" for a, b in pairs) != s:
            raise ParseError(f"malformed cycle form: {text!r}")
    else:
        pairs = _BRACKET_RE.findall(s)
        if ",".join(f"{a}-{b}" for a, b in pairs) != s:
            raise ParseError(f"malformed bracket form: {text!r}")
    try:
        return from_pairs([(int(a), int(b)) for a, b in pairs])
    except InvalidInvolutionError as e:
        raise ParseError(f"{text!r}: {e}") from e
