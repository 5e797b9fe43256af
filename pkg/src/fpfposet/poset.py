"""
Finite graded posets with a bottom and a top, stored as upward cover lists.

Both the Bruhat order on fixed-point-free involutions and the
Deodhar-Srinivasan order are held in a :class:`GradedPoset`.  The module also
carries the generic machinery run on them: reachability, intervals, chain
counting, Moebius function and the rank generating function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterator, Sequence

from .config import DEFAULT_CHAIN_CAP
from .errors import ChainLimitError, InvariantError, NotComparableError

__all__ = ["GradedPoset", "mobius", "rank_genfun", "q_integer", "q_double_factorial",
           "poly_mul", "format_poly"]

Label = tuple[int, int]


@dataclass(eq=False)
class GradedPoset:
    """
    Ground set ``elements`` (indexed by position), upward cover lists and ranks.

    ``labels`` maps an edge ``(i, j)`` of element indices to its edge label, or
    is ``None`` for an unlabeled poset.
    """

    elements: list[Hashable]
    covers: list[list[int]]
    rank: list[int]
    labels: dict[tuple[int, int], Label] | None = None
    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.covers = [sorted(c) for c in self.covers]
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._check()

    def _check(self):
        size = len(self.elements)
        if not size:
            raise InvariantError("empty poset")
        if len(self._index) != size:
            raise InvariantError("duplicate elements")
        if len(self.covers) != size or len(self.rank) != size:
            raise InvariantError("covers/rank length mismatch")
        for i, ups in enumerate(self.covers):
            for j in ups:
                if self.rank[j] != self.rank[i] + 1:
                    raise InvariantError(
                        f"edge {self.elements[i]} -> {self.elements[j]} skips a rank")
        bottoms = [i for i in range(size) if not self.lower_covers[i]]
        tops = [i for i in range(size) if not self.covers[i]]
        if len(bottoms) != 1 or len(tops) != 1:
            raise InvariantError(f"need unique bottom and top, got {len(bottoms)} and {len(tops)}")
        if self.rank[bottoms[0]] != 0:
            raise InvariantError("bottom must have rank 0")

    def __eq__(self, other):
        if not isinstance(other, GradedPoset):
            return NotImplemented
        return (self.elements == other.elements and self.covers == other.covers
                and self.rank == other.rank and (self.labels or {}) == (other.labels or {}))

    __hash__ = None

    # ---- basic structure --------------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def index(self, element) -> int:
        return self._index[element]

    @property
    def bottom(self) -> int:
        return min(range(len(self)), key=lambda i: (self.rank[i], i))

    @property
    def top(self) -> int:
        return max(range(len(self)), key=lambda i: (self.rank[i], -i))

    @property
    def height(self) -> int:
        """Length of the poset: rank of the top."""
        return self.rank[self.top]

    @cached_property
    def lower_covers(self) -> list[list[int]]:
        down: list[list[int]] = [[] for _ in self.elements]
        for i, ups in enumerate(self.covers):
            for j in ups:
                down[j].append(i)
        return down

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, ups in enumerate(self.covers) for j in ups]

    @property
    def n_edges(self) -> int:
        return sum(len(c) for c in self.covers)

    def edge_set(self) -> set[tuple[Hashable, Hashable]]:
        el = self.elements
        return {(el[i], el[j]) for i, j in self.edges()}

    def label(self, i: int, j: int) -> Label | None:
        if self.labels is None:
            return None
        return self.labels.get((i, j))

    @cached_property
    def by_rank(self) -> list[list[int]]:
        layers: list[list[int]] = [[] for _ in range(max(self.rank) + 1)]
        for i, r in enumerate(self.rank):
            layers[r].append(i)
        return layers

    # ---- order relation -----------------------------------------------------------

    @cached_property
    def up_sets(self) -> list[int]:
        """Bitmask of ``{z : z >= x}`` for each element ``x``."""
        up = [0] * len(self)
        for layer in reversed(self.by_rank):
            for i in layer:
                mask = 1 << i
                for j in self.covers[i]:
                    mask |= up[j]
                up[i] = mask
        return up

    @cached_property
    def down_sets(self) -> list[int]:
        down = [0] * len(self)
        for layer in self.by_rank:
            for i in layer:
                mask = 1 << i
                for j in self.lower_covers[i]:
                    mask |= down[j]
                down[i] = mask
        return down

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up_sets[i] >> j & 1)

    def interval_members(self, i: int, j: int) -> list[int]:
        mask = self.up_sets[i] & self.down_sets[j]
        return [k for k in range(len(self)) if mask >> k & 1]

    def comparable_pairs(self, min_gap: int = 1) -> Iterator[tuple[int, int]]:
        """Pairs ``x <= y`` with ``rank(y) - rank(x) >= min_gap``, grouped by rank gap."""
        for gap in range(min_gap, self.height + 1):
            for i in range(len(self)):
                ri = self.rank[i]
                up = self.up_sets[i]
                if ri + gap >= len(self.by_rank):
                    continue
                for j in self.by_rank[ri + gap]:
                    if up >> j & 1:
                        yield i, j

    def interval(self, i: int, j: int) -> "GradedPoset":
        """The closed interval ``[i, j]`` as its own poset, ranks shifted so that ``i`` has rank 0."""
        if not self.leq(i, j):
            raise NotComparableError(f"{self.elements[i]} is not below {self.elements[j]}")
        members = self.interval_members(i, j)
        return self.restrict(members, rank_offset=self.rank[i])

    def restrict(self, members: Sequence[int], rank_offset: int = 0) -> "GradedPoset":
        pos = {k: t for t, k in enumerate(members)}
        covers = [[pos[c] for c in self.covers[k] if c in pos] for k in members]
        labels = None
        if self.labels is not None:
            labels = {(pos[a], pos[b]): lab for (a, b), lab in self.labels.items()
                      if a in pos and b in pos}
        return GradedPoset([self.elements[k] for k in members], covers,
                           [self.rank[k] - rank_offset for k in members], labels)

    # ---- chains -------------------------------------------------------------------------

    def count_chains(self, start: int | None = None) -> list[int]:
        """Number of saturated chains from ``start`` (default: bottom) to every element."""
        start = self.bottom if start is None else start
        counts = [0] * len(self)
        counts[start] = 1
        for layer in self.by_rank[self.rank[start]:]:
            for i in layer:
                if counts[i]:
                    for j in self.covers[i]:
                        counts[j] += counts[i]
        return counts

    def maximal_chains(self, start: int | None = None, end: int | None = None,
                       cap: int = DEFAULT_CHAIN_CAP) -> Iterator[tuple[int, ...]]:
        """
        Saturated chains ``start < ... < end`` as index tuples, depth first in
        cover-list order.  Raises :class:`ChainLimitError` before yielding anything
        when the total exceeds ``cap``.
        """
        start = self.bottom if start is None else start
        end = self.top if end is None else end
        total = self.count_chains(start)[end]
        if total > cap:
            raise ChainLimitError(f"{total} maximal chains", cap)
        target_down = self.down_sets[end]
        path = [start]

        def walk(i):
            if i == end:
                yield tuple(path)
                return
            for j in self.covers[i]:
                if target_down >> j & 1:
                    path.append(j)
                    yield from walk(j)
                    path.pop()

        yield from walk(start)


def mobius(P: GradedPoset, x: int, y: int) -> int:
    """``mu(x, y)`` by the defining recursion ``mu(x, y) = -sum_{x <= z < y} mu(x, z)``."""
    if not P.leq(x, y):
        raise NotComparableError(f"{P.elements[x]} is not below {P.elements[y]}")
    return mobius_from(P, x)[y]


def mobius_from(P: GradedPoset, x: int) -> dict[int, int]:
    """``mu(x, z)`` for every ``z >= x`` (memoized in rank order)."""
    up = P.up_sets[x]
    mu = {x: 1}
    for layer in P.by_rank[P.rank[x] + 1:]:
        for z in layer:
            if up >> z & 1:
                below = P.down_sets[z] & up & ~(1 << z)
                s = 0
                while below:
                    low = below & -below
                    s += mu[low.bit_length() - 1]
                    below ^= low
                mu[z] = -s
    return mu


def mobius_by_chains(P: GradedPoset, x: int, y: int) -> int:
    """Philip Hall's theorem: ``mu(x, y) = sum_k (-1)^k c_k``, ``c_k`` = chains ``x = z_0 < ... < z_k = y``."""
    if not P.leq(x, y):
        raise NotComparableError(f"{P.elements[x]} is not below {P.elements[y]}")
    members = P.interval_members(x, y)
    # chains[z][k]: strict chains of length k from x to z
    chains: dict[int, list[int]] = {}
    for z in sorted(members, key=lambda k: P.rank[k]):
        if z == x:
            chains[z] = [1]
            continue
        row = [0] * (P.rank[z] - P.rank[x] + 1)
        for w in members:
            if w != z and w in chains and P.leq(w, z):
                for k, c in enumerate(chains[w]):
                    row[k + 1] += c
        chains[z] = row
    return sum((-1) ** k * c for k, c in enumerate(chains[y]))


def rank_genfun(P: GradedPoset) -> list[int]:
    """Coefficient ``k`` is the number of elements of rank ``k``."""
    return [len(layer) for layer in P.by_rank]


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            out[i + j] += u * v
    return out


def q_integer(m: int) -> list[int]:
    """``[m]_q = 1 + q + ... + q^(m-1)``."""
    return [1] * m


def q_double_factorial(n: int) -> list[int]:
    """Coefficients of ``[2n-1]_q [2n-3]_q ... [1]_q``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = [1]
    for m in range(2 * n - 1, 0, -2):
        out = poly_mul(out, q_integer(m))
    return out


def format_poly(coeffs: Sequence[int], var: str = "q") -> str:
    """
    >>> format_poly([1, 2, 1])
    '1 + 2q + q^2'
    """
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        coef = str(c) if (c != 1 or k == 0) else ""
        terms.append(f"{coef}{mono}")
    return " + ".join(terms) or "0"
