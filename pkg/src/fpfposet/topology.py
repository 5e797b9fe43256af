"""
Order complex of a bounded graded poset and the ball certificate.

Facets of the order complex are the maximal chains with bottom and top
removed.  A ridge is a facet minus one vertex.  A pure shellable complex in
which every ridge lies in at most two facets is a ball or a sphere, and a ball
exactly when some ridge lies in a single facet.  The certificate records those
hypotheses together with ``mu(bottom, top)``, the reduced Euler characteristic
(0 for a ball).  It is a combinatorial certificate, not a homeomorphism proof.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass
from typing import Iterator

from .config import DEFAULT_CHAIN_CAP, DEFAULT_RIDGE_MEM_CAP
from .el import ELReport
from .errors import DegenerateError, InvariantError, RidgeMemoryError
from .poset import GradedPoset, mobius

__all__ = ["order_complex_facets", "iter_facets", "ridge_multiplicities", "BallCertificate",
           "ball_certificate", "VERDICTS"]

VERDICTS = ("ball_consistent", "sphere_consistent", "fail", "degenerate")


def iter_facets(P: GradedPoset, chain_cap: int = DEFAULT_CHAIN_CAP) -> Iterator[tuple[int, ...]]:
    if P.height < 2:
        raise DegenerateError(f"proper part is empty (poset length {P.height})")
    for chain in P.maximal_chains(cap=chain_cap):
        yield chain[1:-1]


def order_complex_facets(P: GradedPoset, chain_cap: int = DEFAULT_CHAIN_CAP) -> list[tuple[int, ...]]:
    """All facets as tuples of element indices, in rank order within each facet."""
    return list(iter_facets(P, chain_cap))


def ridge_multiplicities(P: GradedPoset, chain_cap: int = DEFAULT_CHAIN_CAP,
                         ridge_mem_cap: int = DEFAULT_RIDGE_MEM_CAP) -> tuple[Counter, int, int]:
    """
    Hash multiset of ridges.

    Returns ``(counter, facet_count, facet_size)``; ridges are keyed by the
    packed sorted vertex indices.  Raises :class:`RidgeMemoryError` once more
    than ``ridge_mem_cap`` distinct ridges are held.
    """
    pack = bytes if len(P) < 256 else tuple
    table: Counter = Counter()
    facets = 0
    size = None
    for f in iter_facets(P, chain_cap):
        if size is None:
            size = len(f)
        elif len(f) != size:
            raise InvariantError(f"order complex is not pure: facets of sizes {size} and {len(f)}")
        facets += 1
        table.update(pack(f[:t] + f[t + 1:]) for t in range(len(f)))
        if len(table) > ridge_mem_cap:
            raise RidgeMemoryError("ridge table", ridge_mem_cap)
    return table, facets, size or 0


@dataclass
class BallCertificate:
    n: int | None
    complex_dimension: int | None
    facet_count: int
    ridge_max_multiplicity: int
    boundary_ridge_exists: bool
    mobius_bottom_top: int | None
    verdict: str

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "BallCertificate":
        return cls(**d)


def ball_certificate(P: GradedPoset, el: ELReport | None, chain_cap: int = DEFAULT_CHAIN_CAP,
                     ridge_mem_cap: int = DEFAULT_RIDGE_MEM_CAP, n: int | None = None) -> BallCertificate:
    """
    Certify the ball hypotheses for the order complex of ``P``.

    ``el`` must be a report covering ``P``; without a verified report the
    verdict can only be ``fail``.  Posets whose proper part is empty get the
    ``degenerate`` verdict.
    """
    if n is None:
        n = getattr(P.elements[0], "n", None)
    if P.height < 2:
        return BallCertificate(n, None, 0, 0, False, None, "degenerate")
    table, facets, size = ridge_multiplicities(P, chain_cap, ridge_mem_cap)
    top_mult = max(table.values())
    boundary = any(c == 1 for c in table.values())
    mu = mobius(P, P.bottom, P.top)
    shellable = el is not None and el.verified
    if shellable and top_mult <= 2 and boundary and mu == 0:
        verdict = "ball_consistent"
    elif shellable and top_mult == 2 and not boundary and mu in (1, -1):
        verdict = "sphere_consistent"
    else:
        verdict = "fail"
    return BallCertificate(n, size - 1, facets, top_mult, boundary, mu, verdict)
