"""
Rises of a fixed-point-free involution and the two covering moves.

A rise is a pair ``i1 < i2`` with ``x(i1) < x(i2)``; it is free when no ``k``
strictly between them has ``x(i1) < x(k) < x(i2)``.  Each position is either an
exceedance (``x(i) > i``) or a defect (``x(i) < i``), so a rise is one of
``ee``, ``ed``, ``de``, ``dd``; ``ee`` rises split further into crossing
(``i1 < x(i1) < i2 < x(i2)``) and non-crossing (``i1 < i2 < x(i1) < x(i2)``).

Covers one rank up come from free rises of two kinds only:

* non-crossing ``ee`` rise ``(i, j)``: arcs ``(i, x(i)), (j, x(j))`` become
  ``(i, x(j)), (j, x(i))``;
* ``ed`` rise ``(i, j)``: arcs ``(i, x(i)), (x(j), j)`` become
  ``(i, x(j)), (x(i), j)``.

The edge label of the resulting cover is the rise pair ``(i, j)`` itself.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .config import DEFAULT_ENUMERATION_CAP
from .errors import UnsuitableRiseError
from .involution import FpfInvolution, _trusted, enumerate_fpf, length
from .poset import GradedPoset

__all__ = ["RiseKind", "Rise", "Label", "classify_rises", "suitable_rises", "apply_ct",
           "rise_covers", "fpf_poset", "crossing_rise_audit", "label_key"]

log = logging.getLogger(__name__)


class RiseKind(str, Enum):
    EE_NONCROSSING = "ee_noncrossing"
    EE_CROSSING = "ee_crossing"
    ED = "ed"
    DE = "de"
    DD = "dd"


SUITABLE_KINDS = (RiseKind.EE_NONCROSSING, RiseKind.ED)


class Label(NamedTuple):
    """Edge label in ``[2n] x [2n]``; tuples compare lexicographically."""

    i1: int
    i2: int

    def __str__(self):
        return f"({self.i1},{self.i2})"


def label_key(direction: str):
    """Sort key realising the chosen total order on labels: ``standard`` or ``reversed``."""
    if direction == "standard":
        return lambda lab: (lab[0], lab[1])
    if direction == "reversed":
        return lambda lab: (-lab[0], -lab[1])
    raise ValueError(f"direction must be 'standard' or 'reversed', got {direction!r}")


@dataclass(frozen=True)
class Rise:
    i1: int
    i2: int
    kind: RiseKind
    free: bool

    @property
    def suitable(self) -> bool:
        return self.free and self.kind in SUITABLE_KINDS

    @property
    def label(self) -> Label:
        return Label(self.i1, self.i2)


def _kind(x: FpfInvolution, i: int, j: int) -> RiseKind:
    xi, xj = x(i), x(j)
    if xi > i and xj > j:
        return RiseKind.EE_NONCROSSING if j < xi else RiseKind.EE_CROSSING
    if xi > i:
        return RiseKind.ED
    if xj > j:
        return RiseKind.DE
    return RiseKind.DD


def _is_free(x: FpfInvolution, i: int, j: int) -> bool:
    lo, hi = x(i), x(j)
    return not any(lo < x(k) < hi for k in range(i + 1, j))


def classify_rises(x: FpfInvolution) -> list[Rise]:
    """Every rise of ``x`` in lexicographic order, tagged with kind and freeness."""
    m = len(x.word)
    return [Rise(i, j, _kind(x, i, j), _is_free(x, i, j))
            for i in range(1, m + 1) for j in range(i + 1, m + 1) if x(i) < x(j)]


def suitable_rises(x: FpfInvolution) -> list[Rise]:
    return [r for r in classify_rises(x) if r.suitable]


def apply_ct(x: FpfInvolution, r: Rise | tuple[int, int]) -> FpfInvolution:
    """Apply the covering move of a suitable rise; raises :class:`UnsuitableRiseError` otherwise."""
    i, j = (r.i1, r.i2) if isinstance(r, Rise) else r
    m = len(x.word)
    if not (1 <= i < j <= m):
        raise UnsuitableRiseError(f"({i},{j}) is not a pair of positions i1 < i2 in 1..{m}")
    if not x(i) < x(j):
        raise UnsuitableRiseError(f"({i},{j}) is not a rise of {x}: x(i1) > x(i2)")
    if not _is_free(x, i, j):
        raise UnsuitableRiseError(f"rise ({i},{j}) of {x} is not free")
    kind = _kind(x, i, j)
    if isinstance(r, Rise) and r.kind != kind:
        raise UnsuitableRiseError(f"rise ({i},{j}) of {x} has kind {kind.value}, not {r.kind.value}")
    word = list(x.word)
    xi, xj = x(i), x(j)
    if kind is RiseKind.EE_NONCROSSING:
        # i < j < x(i) < x(j)  ->  (i, x(j)), (j, x(i))
        word[i - 1], word[xj - 1] = xj, i
        word[j - 1], word[xi - 1] = xi, j
    elif kind is RiseKind.ED:
        # i < x(i) < x(j) < j  ->  (i, x(j)), (x(i), j)
        word[i - 1], word[xj - 1] = xj, i
        word[xi - 1], word[j - 1] = j, xi
    else:
        raise UnsuitableRiseError(f"rise ({i},{j}) of {x} has unsupported kind {kind.value}")
    return _trusted(tuple(word))


def rise_covers(x: FpfInvolution) -> set[tuple[FpfInvolution, Label]]:
    """The labeled upward star of ``x``."""
    return {(apply_ct(x, r), r.label) for r in suitable_rises(x)}


def fpf_poset(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> GradedPoset:
    """The labeled Hasse diagram of all fixed-point-free involutions of ``[2n]``, generated by rises."""
    elements = enumerate_fpf(n, cap)
    index = {e: k for k, e in enumerate(elements)}
    covers: list[list[int]] = []
    labels = {}
    for k, x in enumerate(elements):
        ups = []
        for y, lab in rise_covers(x):
            t = index[y]
            ups.append(t)
            labels[(k, t)] = lab
        covers.append(ups)
    return GradedPoset(elements, covers, [length(e) for e in elements], labels)


def crossing_rise_audit(x: FpfInvolution, covers: set[FpfInvolution] | None = None
                        ) -> list[tuple[Rise, FpfInvolution]]:
    """
    Look for covers reachable through a free crossing ``ee`` rise and missed by the two moves.

    A crossing rise ``i < x(i) < j < x(j)`` touches four points; the only other
    fixed-point-free matchings of those points are tried.  Each candidate that is
    a cover of ``x`` but not produced by :func:`rise_covers` is returned and logged.
    """
    from .bruhat import bruhat_leq

    if covers is None:
        covers = {y for y, _ in rise_covers(x)}
    target = length(x) + 1
    found = []
    for r in classify_rises(x):
        if not (r.free and r.kind is RiseKind.EE_CROSSING):
            continue
        a, b, c, d = r.i1, x(r.i1), r.i2, x(r.i2)
        for pairing in (((a, c), (b, d)), ((a, d), (b, c))):
            word = list(x.word)
            for p, q in pairing:
                word[p - 1], word[q - 1] = q, p
            y = _trusted(tuple(word))
            if y not in covers and length(y) == target and bruhat_leq(x, y):
                log.warning("crossing rise (%d,%d) of %s reaches uncovered %s", r.i1, r.i2, x, y)
                found.append((r, y))
    return found
