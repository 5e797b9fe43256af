"""
Bruhat order on fixed-point-free involutions via rank matrices.

This is the independent oracle for the cover relation: it knows nothing about
rises.  ``x <= y`` holds iff ``r_x(i, j) >= r_y(i, j)`` for every ``i, j``, where
``r_x(i, j) = #{k <= i : x(k) <= j}``.  With this orientation the identity
permutation is the bottom of the Bruhat order, and ``j_2n`` and ``w_0`` are the
bottom and top of the fixed-point-free involutions.
"""

from __future__ import annotations

import numpy as np

from .config import DEFAULT_ENUMERATION_CAP
from .errors import NotComparableError, SizeMismatchError
from .involution import FpfInvolution, enumerate_fpf, length
from .poset import GradedPoset

__all__ = ["rank_matrix", "bruhat_leq", "compare", "brute_covers", "interval", "bruhat_poset"]


def rank_matrix(x: FpfInvolution) -> np.ndarray:
    """``2n x 2n`` integer array; entry ``[i-1, j-1]`` counts ``k <= i`` with ``x(k) <= j``."""
    m = len(x.word)
    perm = np.zeros((m, m), dtype=np.int16)
    perm[np.arange(m), np.asarray(x.word) - 1] = 1
    return perm.cumsum(axis=0).cumsum(axis=1)


def _check_sizes(x: FpfInvolution, y: FpfInvolution):
    if x.n != y.n:
        raise SizeMismatchError(f"cannot compare elements of sizes 2n={2 * x.n} and 2n={2 * y.n}")


def bruhat_leq(x: FpfInvolution, y: FpfInvolution) -> bool:
    _check_sizes(x, y)
    return bool(np.all(rank_matrix(x) >= rank_matrix(y)))


def compare(x: FpfInvolution, y: FpfInvolution) -> int | None:
    """-1, 0 or 1 when ``x < y``, ``x == y``, ``x > y``; ``None`` when incomparable."""
    _check_sizes(x, y)
    if x == y:
        return 0
    rx, ry = rank_matrix(x), rank_matrix(y)
    if np.all(rx >= ry):
        return -1
    if np.all(rx <= ry):
        return 1
    return None


def brute_covers(x: FpfInvolution, cap: int = DEFAULT_ENUMERATION_CAP) -> set[FpfInvolution]:
    """All ``y`` one rank above ``x`` with ``x <= y``."""
    target = length(x) + 1
    rx = rank_matrix(x)
    return {y for y in enumerate_fpf(x.n, cap)
            if length(y) == target and np.all(rx >= rank_matrix(y))}


def _stacked(elements: list[FpfInvolution]) -> np.ndarray:
    if not elements:
        m = 0
        return np.zeros((0, m, m), dtype=np.int16)
    return np.stack([rank_matrix(e) for e in elements])


def bruhat_poset(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> GradedPoset:
    """
    The whole poset built from rank matrices, comparing only elements one rank apart.

    Edges are unlabeled.
    """
    elements = enumerate_fpf(n, cap)
    return _graded_from_members(elements)


def _graded_from_members(elements: list[FpfInvolution]) -> GradedPoset:
    ranks = [length(e) for e in elements]
    base = min(ranks)
    layers: dict[int, list[int]] = {}
    for i, r in enumerate(ranks):
        layers.setdefault(r, []).append(i)
    mats = {r: _stacked([elements[i] for i in idx]) for r, idx in layers.items()}
    covers: list[list[int]] = [[] for _ in elements]
    for r, idx in layers.items():
        if r + 1 not in layers:
            continue
        lo, hi = mats[r], mats[r + 1]
        # leq[a, b] iff lo[a] >= hi[b] entrywise
        leq = np.all(lo[:, None] >= hi[None, :], axis=(2, 3))
        upper = layers[r + 1]
        for a, b in zip(*np.nonzero(leq)):
            covers[idx[a]].append(upper[b])
    return GradedPoset(list(elements), covers, [r - base for r in ranks])


def interval(x: FpfInvolution, y: FpfInvolution,
             cap: int = DEFAULT_ENUMERATION_CAP) -> GradedPoset:
    """``{z : x <= z <= y}`` with its covers, ranks shifted so ``x`` has rank 0."""
    _check_sizes(x, y)
    if not bruhat_leq(x, y):
        raise NotComparableError(f"{x} is not below {y}")
    rx, ry = rank_matrix(x), rank_matrix(y)
    members = [z for z in enumerate_fpf(x.n, cap)
               if np.all(rx >= rank_matrix(z)) and np.all(rank_matrix(z) >= ry)]
    return _graded_from_members(members)
