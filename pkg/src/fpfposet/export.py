"""Deterministic DOT, JSON and CSV writers, with readers for the JSON/CSV shapes."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable

from .involution import FpfInvolution, format_brackets, length, parse
from .poset import GradedPoset

__all__ = ["export_hasse", "poset_to_dict", "poset_from_dict", "enumeration_csv",
           "read_enumeration_csv", "edges_csv", "dumps"]


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_hasse(P: GradedPoset, labeled: bool = True, name: str = "hasse",
                 highlight: Iterable[tuple[int, int]] = (),
                 extra_edges: Iterable[tuple[int, int]] = ()) -> str:
    """
    Graphviz digraph of the Hasse diagram, drawn bottom to top.

    Nodes appear in index order inside one ``rank=same`` group per rank; edges
    are sorted by (lower index, upper index).  Edges in ``highlight`` get
    ``color=red``; ``extra_edges`` (pairs absent from ``P``) are drawn dashed.
    """
    highlight = set(highlight)
    extra = set(extra_edges)
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for layer in P.by_rank:
        nodes = " ".join(_quote(str(P.elements[i])) + ";" for i in sorted(layer))
        lines.append(f"  {{ rank=same; {nodes} }}")
    for i, j in sorted(set(P.edges()) | extra):
        attrs = []
        lab = P.label(i, j) if labeled else None
        if lab is not None:
            attrs.append(f'label="({lab[0]},{lab[1]})"')
        if (i, j) in highlight:
            attrs.append("color=red")
        if (i, j) in extra:
            attrs.append("style=dashed")
        tail = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(str(P.elements[i]))} -> {_quote(str(P.elements[j]))}{tail};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_dict(P: GradedPoset) -> dict:
    return {
        "elements": [str(e) for e in P.elements],
        "rank": list(P.rank),
        "edges": [[i, j, (None if P.label(i, j) is None else list(P.label(i, j)))]
                  for i, j in P.edges()],
    }


def poset_from_dict(d: dict) -> GradedPoset:
    elements = [parse(s) for s in d["elements"]]
    covers: list[list[int]] = [[] for _ in elements]
    labels = {}
    for i, j, lab in d["edges"]:
        covers[i].append(j)
        if lab is not None:
            labels[(i, j)] = tuple(lab)
    from .rises import Label

    return GradedPoset(elements, covers, list(d["rank"]),
                       {e: Label(*lab) for e, lab in labels.items()} if labels else None)


def enumeration_csv(elements: Iterable[FpfInvolution]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "cycle", "brackets", "word", "length"])
    for k, x in enumerate(elements):
        w.writerow([k, str(x), format_brackets(x), "".join(f"{v} " for v in x.word).strip(), length(x)])
    return buf.getvalue()


def read_enumeration_csv(text: str) -> list[FpfInvolution]:
    rows = list(csv.DictReader(io.StringIO(text)))
    out = []
    for row in rows:
        x = parse(row["cycle"])
        if parse(row["brackets"]) != x or tuple(int(v) for v in row["word"].split()) != x.word:
            raise ValueError(f"inconsistent row {row}")
        if int(row["length"]) != length(x):
            raise ValueError(f"wrong length in row {row}")
        out.append(x)
    return out


def edges_csv(P: GradedPoset) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lower", "upper", "label"])
    for i, j in P.edges():
        lab = P.label(i, j)
        w.writerow([str(P.elements[i]), str(P.elements[j]), "" if lab is None else f"({lab[0]},{lab[1]})"])
    return buf.getvalue()


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"
