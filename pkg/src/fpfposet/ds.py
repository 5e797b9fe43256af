"""
The Deodhar-Srinivasan order on bracket expressions ``[a_1,b_1]...[a_n,b_n]``.

An upper cover of ``x`` is obtained by one interchange and raises the
Deodhar-Srinivasan length by exactly one:

* type 1: ``a_i < b_i < a_j < b_j``, swap ``b_i`` and ``a_j``;
* type 2: ``a_i < a_j < b_i < b_j``, swap ``b_i`` and ``b_j``.

The interchanged word must itself be a canonical bracket expression (first
coordinates still increasing); a word that would need re-sorting is not an
element and yields no cover.  This is what removes the edge
``[1,2][3,6][4,5] -> [1,4][2,5][3,6]``.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field

from .config import DEFAULT_ENUMERATION_CAP
from .errors import MalformedBracketError, SubposetViolationError
from .involution import BracketSequence, FpfInvolution, ds_length, enumerate_fpf, from_brackets, length
from .poset import GradedPoset
from .rises import RiseKind, classify_rises, fpf_poset

__all__ = ["interchanges", "ds_upper_covers", "build_ds_poset", "ComparisonReport",
           "compare_posets", "type_rise_mismatches"]

log = logging.getLogger(__name__)


def interchanges(x: FpfInvolution) -> list[tuple[int, FpfInvolution]]:
    """``(type, result)`` for every type-1/type-2 interchange whose word stays canonical."""
    pairs = x.pairs
    out = []
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            (ai, bi), (aj, bj) = pairs[i], pairs[j]
            moves = []
            if bi < aj:
                moves.append((1, (ai, aj), (bi, bj)))
            if aj < bi < bj:
                moves.append((2, (ai, bj), (aj, bi)))
            for kind, new_i, new_j in moves:
                word = list(pairs)
                word[i], word[j] = new_i, new_j
                try:
                    out.append((kind, from_brackets(BracketSequence(tuple(word)))))
                except MalformedBracketError:
                    log.debug("type %d interchange of %s at (%d,%d) is not canonical", kind, x, i + 1, j + 1)
    return out


def _cover_moves(x: FpfInvolution) -> list[tuple[int, FpfInvolution]]:
    base = ds_length(x)
    moves = []
    for kind, y in interchanges(x):
        jump = ds_length(y) - base
        if jump == 1:
            moves.append((kind, y))
        else:
            log.debug("type %d interchange %s -> %s raises length by %d; not a cover", kind, x, y, jump)
    return moves


def ds_upper_covers(x: FpfInvolution) -> set[FpfInvolution]:
    return {y for _, y in _cover_moves(x)}


def build_ds_poset(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> GradedPoset:
    """Deodhar-Srinivasan poset on all fixed-point-free involutions of ``[2n]``; rank is ``ds_length``."""
    elements = enumerate_fpf(n, cap)
    index = {e: k for k, e in enumerate(elements)}
    covers = [[index[y] for y in ds_upper_covers(x)] for x in elements]
    return GradedPoset(elements, covers, [ds_length(x) for x in elements])


@dataclass
class ComparisonReport:
    n: int
    elements_equal: bool
    rank_function_equal: bool
    ds_edges: int
    f_edges: int
    edges_in_f_not_ds: list[tuple[str, str]] = field(default_factory=list)
    edges_in_ds_not_f: list[tuple[str, str]] = field(default_factory=list)

    @property
    def subposet_holds(self) -> bool:
        return not self.edges_in_ds_not_f

    def to_dict(self) -> dict:
        d = asdict(self)
        d["edges_in_f_not_ds"] = [list(e) for e in self.edges_in_f_not_ds]
        d["edges_in_ds_not_f"] = [list(e) for e in self.edges_in_ds_not_f]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ComparisonReport":
        d = dict(d)
        for k in ("edges_in_f_not_ds", "edges_in_ds_not_f"):
            d[k] = [tuple(e) for e in d[k]]
        return cls(**d)


def _sorted_edges(edges, order):
    return [(str(a), str(b)) for a, b in sorted(edges, key=lambda e: (order[e[0]], order[e[1]]))]


def compare_posets(n: int, cap: int = DEFAULT_ENUMERATION_CAP, strict: bool = True,
                   F: GradedPoset | None = None, DS: GradedPoset | None = None) -> ComparisonReport:
    """
    Edge-by-edge diff of the Bruhat poset and the Deodhar-Srinivasan poset.

    With ``strict`` a DS edge missing from the Bruhat Hasse diagram raises
    :class:`SubposetViolationError`.
    """
    F = fpf_poset(n, cap) if F is None else F
    DS = build_ds_poset(n, cap) if DS is None else DS
    order = {e: k for k, e in enumerate(F.elements)}
    f_edges, ds_edges = F.edge_set(), DS.edge_set()
    f_rank = {e: r for e, r in zip(F.elements, F.rank)}
    report = ComparisonReport(
        n=n,
        elements_equal=set(F.elements) == set(DS.elements),
        rank_function_equal=all(f_rank.get(e) == r for e, r in zip(DS.elements, DS.rank)),
        ds_edges=len(ds_edges),
        f_edges=len(f_edges),
        edges_in_f_not_ds=_sorted_edges(f_edges - ds_edges, order),
        edges_in_ds_not_f=_sorted_edges(ds_edges - f_edges, order),
    )
    if strict and report.edges_in_ds_not_f:
        raise SubposetViolationError(
            f"{len(report.edges_in_ds_not_f)} DS covers are not Bruhat covers, first "
            f"{report.edges_in_ds_not_f[0]}")
    return report


def type_rise_mismatches(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[tuple[str, str, int, str]]:
    """
    DS covers whose interchange type does not match the rise that produces the
    same Bruhat cover (type 1 should be an ``ed`` rise, type 2 an ``ee`` rise).
    """
    F = fpf_poset(n, cap)
    expected = {1: RiseKind.ED, 2: RiseKind.EE_NONCROSSING}
    bad = []
    for k, x in enumerate(F.elements):
        kinds = {(r.i1, r.i2): r.kind for r in classify_rises(x)}
        label_of = {F.elements[t]: F.labels[(k, t)] for t in F.covers[k]}
        for kind, y in _cover_moves(x):
            lab = label_of.get(y)
            got = kinds.get(tuple(lab)) if lab is not None else None
            if got is not expected[kind]:
                bad.append((str(x), str(y), kind, got.value if got else "no-edge"))
    return bad
