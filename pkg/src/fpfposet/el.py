"""
Exhaustive verification of an EL-labeling, and the shelling it induces.

For every interval ``[x, y]`` of positive length the verifier counts the
saturated chains whose label word is monotone in the chosen sense and checks
that the lexicographically first chain is that unique monotone chain.  Chain
counts come from a dynamic program over the Hasse diagram; chains are only
materialised for the greedy lex-first walk.

``direction="reversed"`` orders labels by the dual of the lexicographic order on
``[2n] x [2n]`` and looks for weakly *increasing* chains that are lex-*first*.
``direction="standard"`` keeps the lexicographic order and looks for weakly
*decreasing* chains that are lex-*last*.  The two statements are dual; they are
computed separately so each can be reported on its own.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .config import DEFAULT_CHAIN_CAP
from .errors import ChainLimitError, NonCoverStepError, ShellingError, UnlabeledEdgeError
from .poset import GradedPoset
from .rises import Label, label_key

__all__ = ["ELFailure", "ELReport", "label_word", "verify_el", "extremal_chain",
           "shelling_order", "first_shelling_violation", "check_shelling_bruteforce"]

DIRECTIONS = ("standard", "reversed")


@dataclass(frozen=True)
class ELFailure:
    lower: str
    upper: str
    monotone_chains: int
    lex_first_mismatch: bool


@dataclass
class ELReport:
    n: int | None
    direction: str
    intervals_checked: int = 0
    failures: list[ELFailure] = field(default_factory=list)
    max_interval_length: int = 0
    timing: float | None = None

    @property
    def verified(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d["timing"] = None
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ELReport":
        d = dict(d)
        d["failures"] = [ELFailure(**f) for f in d.get("failures", [])]
        return cls(**d)


def _require_labels(P: GradedPoset):
    if P.labels is None:
        raise UnlabeledEdgeError("poset carries no edge labels")
    for e in P.edges():
        if e not in P.labels:
            a, b = e
            raise UnlabeledEdgeError(f"edge {P.elements[a]} -> {P.elements[b]} has no label")


def label_word(P: GradedPoset, chain: Sequence[int]) -> list[Label]:
    """Labels along a saturated chain given by element indices."""
    word = []
    for a, b in zip(chain, chain[1:]):
        if b not in P.covers[a]:
            raise NonCoverStepError(f"{P.elements[a]} -> {P.elements[b]} is not a cover")
        lab = P.label(a, b)
        if lab is None:
            raise UnlabeledEdgeError(f"edge {P.elements[a]} -> {P.elements[b]} has no label")
        word.append(lab)
    return word


def _order(direction: str):
    """(key, monotone predicate on consecutive keys, pick lex-first or lex-last)."""
    if direction == "reversed":
        key = label_key("reversed")
        return key, (lambda a, b: a <= b), min
    if direction == "standard":
        key = label_key("standard")
        return key, (lambda a, b: a >= b), max
    raise ValueError(f"direction must be one of {DIRECTIONS}, got {direction!r}")


def extremal_chain(P: GradedPoset, x: int, y: int, direction: str = "reversed") -> tuple[int, ...]:
    """
    The lex-first saturated chain from ``x`` to ``y`` (lex-last under the standard
    order when ``direction="standard"``), found greedily.

    Greedy is exact because the labels on the upward edges of any element are distinct.
    """
    key, _, pick = _order(direction)
    target = P.down_sets[y]
    chain = [x]
    z = x
    while z != y:
        options = [w for w in P.covers[z] if target >> w & 1]
        z = pick(options, key=lambda w: key(P.labels[(chain[-1], w)]))
        chain.append(z)
    return tuple(chain)


def verify_el(P: GradedPoset, direction: str = "reversed", chain_cap: int = DEFAULT_CHAIN_CAP,
              n: int | None = None, workers: int = 1) -> ELReport:
    """
    Check every interval of positive length of ``P``.

    ``workers > 1`` spreads the lower endpoints over processes; the merged
    report does not depend on the worker count.
    """
    _require_labels(P)
    _order(direction)
    if n is None:
        n = getattr(P.elements[0], "n", None)
    start = time.perf_counter()
    lowers = list(range(len(P)))
    if workers > 1 and len(P) >= PARALLEL_THRESHOLD:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [lowers[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan, [P] * workers, chunks, [direction] * workers,
                                  [chain_cap] * workers))
    else:
        parts = [_scan(P, lowers, direction, chain_cap)]
    report = ELReport(n=n, direction=direction)
    for checked, failures, longest in parts:
        report.intervals_checked += checked
        report.failures.extend(failures)
        report.max_interval_length = max(report.max_interval_length, longest)
    report.failures.sort(key=lambda f: (f.lower, f.upper))
    report.timing = time.perf_counter() - start
    return report


# below this size process start-up costs more than the scan
PARALLEL_THRESHOLD = 500


def _scan(P: GradedPoset, lowers: Sequence[int], direction: str, chain_cap: int):
    key, monotone, _ = _order(direction)
    keys = {e: key(lab) for e, lab in P.labels.items()}
    checked = longest = 0
    failures = []
    for x in lowers:
        up = P.up_sets[x]
        total = P.count_chains(x)
        # mono[z]: {key of last label: number of monotone chains x -> z ending with it}
        mono: dict[int, dict] = {x: {None: 1}}
        for layer in P.by_rank[P.rank[x]:]:
            for z in layer:
                state = mono.get(z)
                if not state:
                    continue
                for w in P.covers[z]:
                    k = keys[(z, w)]
                    add = sum(c for last, c in state.items() if last is None or monotone(last, k))
                    if add:
                        bucket = mono.setdefault(w, {})
                        bucket[k] = bucket.get(k, 0) + add
        for y in range(len(P)):
            if y == x or not up >> y & 1:
                continue
            if total[y] > chain_cap:
                raise ChainLimitError(
                    f"interval [{P.elements[x]}, {P.elements[y]}] with {total[y]} maximal chains",
                    chain_cap)
            checked += 1
            longest = max(longest, P.rank[y] - P.rank[x])
            count = sum(mono.get(y, {}).values())
            chain = extremal_chain(P, x, y, direction)
            ks = [keys[e] for e in zip(chain, chain[1:])]
            first_is_monotone = all(monotone(a, b) for a, b in zip(ks, ks[1:]))
            if count != 1 or not first_is_monotone:
                failures.append(ELFailure(str(P.elements[x]), str(P.elements[y]),
                                          count, not first_is_monotone))
    return checked, failures, longest


def monotone_chains(P: GradedPoset, x: int, y: int, direction: str = "reversed",
                    chain_cap: int = DEFAULT_CHAIN_CAP) -> list[tuple[int, ...]]:
    """Every monotone saturated chain of ``[x, y]``, by explicit enumeration."""
    key, monotone, _ = _order(direction)
    out = []
    for chain in P.maximal_chains(x, y, cap=chain_cap):
        ks = [key(P.labels[e]) for e in zip(chain, chain[1:])]
        if all(monotone(a, b) for a, b in zip(ks, ks[1:])):
            out.append(chain)
    return out


# ---- shelling --------------------------------------------------------------------------


def shelling_order(P: GradedPoset, direction: str = "reversed",
                   chain_cap: int = DEFAULT_CHAIN_CAP) -> list[tuple[int, ...]]:
    """
    Maximal chains from bottom to top in lexicographic order of their label words,
    each checked against the shelling condition.

    Facets are the chains with bottom and top removed.  Facet ``F_k`` meets the
    union of earlier facets in a pure codimension-one complex iff the set
    ``D_k`` of vertices ``v`` with ``F_k - v`` lying in an earlier facet is
    nonempty and contained in no earlier facet.  The earliest facet through a
    fixed subchain is the concatenation of greedy lex-first segments, so the
    second condition is checked segment by segment.
    """
    _require_labels(P)
    key, _, pick = _order(direction)
    bottom, top = P.bottom, P.top
    total = P.count_chains(bottom)[top]
    if total > chain_cap:
        raise ChainLimitError(f"{total} maximal chains", chain_cap)

    # depth-first in label order enumerates chains in lex order of label words
    ordered_covers = [sorted(ups, key=lambda w, z=z: key(P.labels[(z, w)])) for z, ups in enumerate(P.covers)]
    if pick is max:
        ordered_covers = [list(reversed(c)) for c in ordered_covers]
    chains: list[tuple[int, ...]] = []
    path = [bottom]

    def walk(z):
        if z == top:
            chains.append(tuple(path))
            return
        for w in ordered_covers[z]:
            path.append(w)
            walk(w)
            path.pop()

    walk(bottom)

    bad = first_shelling_violation(P, chains, direction)
    if bad is not None:
        raise ShellingError(f"facet {bad} of the lexicographic order breaks the shelling condition")
    return chains


def first_shelling_violation(P: GradedPoset, chains: Sequence[tuple[int, ...]],
                             direction: str = "reversed") -> int | None:
    """
    Index of the first chain violating the shelling condition, or ``None``.

    ``chains`` must list every maximal chain in lexicographic order of label words
    for ``direction``; the segment test relies on that order.
    """
    position = {c: k for k, c in enumerate(chains)}
    first: dict[tuple[int, int], tuple[int, ...]] = {}

    def lex_first(a, b):
        seg = first.get((a, b))
        if seg is None:
            seg = first[(a, b)] = extremal_chain(P, a, b, direction)
        return seg

    for k, chain in enumerate(chains):
        if k == 0:
            continue
        # interior positions 1..len-2 are the facet's vertices
        shared = []
        for t in range(1, len(chain) - 1):
            lo, v, hi = chain[t - 1], chain[t], chain[t + 1]
            for alt in P.covers[lo]:
                if alt != v and hi in P.covers[alt]:
                    other = chain[:t] + (alt,) + chain[t + 1:]
                    if position[other] < k:
                        shared.append(t)
                        break
        if not shared:
            return k
        cuts = [0] + shared + [len(chain) - 1]
        if any(chain[a:b + 1] != lex_first(chain[a], chain[b]) for a, b in zip(cuts, cuts[1:])):
            return k
    return None


def check_shelling_bruteforce(facets: Sequence[frozenset]) -> int | None:
    """
    Direct check of the shelling condition on an ordered list of facets (vertex sets).

    Returns the index of the first violating facet, or ``None``.  For each facet
    the intersections with all earlier facets are computed; their maximal
    members must all have size ``dim`` (one less than the facet).
    """
    for k in range(1, len(facets)):
        fk = facets[k]
        meets = {fk & facets[i] for i in range(k)}
        maximal = [m for m in meets if not any(m < o for o in meets)]
        if any(len(m) != len(fk) - 1 for m in maximal):
            return k
    return None
