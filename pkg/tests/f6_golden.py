"""Normalise the hand transcription of the n=3 Hasse diagram into DOT, without the package."""

import re
from pathlib import Path

DATA = Path(__file__).parent / "data"


def read_transcription(path=DATA / "f6_hasse_transcription.txt"):
    nodes, edges = {}, []
    lines = [l.strip() for l in path.read_text().splitlines() if l.strip() and not l.startswith("#")]
    split = lines.index("--")
    for line in lines[:split]:
        name, cycle = line.split()
        nodes[name] = cycle
    for line in lines[split + 1:]:
        lo, hi, label = line.split()
        edges.append((nodes[lo], nodes[hi], label))
    # layer letter a..g is the rank in the drawing
    ranks = {cycle: ord(name[0]) - ord("a") for name, cycle in nodes.items()}
    return nodes, edges, ranks


def one_line_word(cycle):
    pairs = [tuple(map(int, p)) for p in re.findall(r"\((\d+),(\d+)\)", cycle)]
    word = [0] * (2 * len(pairs))
    for a, b in pairs:
        word[a - 1], word[b - 1] = b, a
    return tuple(word)


def normalized_dot(name="F6"):
    nodes, edges, ranks = read_transcription()
    order = sorted(nodes.values(), key=one_line_word)
    pos = {c: k for k, c in enumerate(order)}
    out = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for r in range(max(ranks.values()) + 1):
        layer = [c for c in order if ranks[c] == r]
        out.append("  { rank=same; " + " ".join(f'"{c}";' for c in layer) + " }")
    for lo, hi, label in sorted(edges, key=lambda e: (pos[e[0]], pos[e[1]])):
        out.append(f'  "{lo}" -> "{hi}" [label="{label}"];')
    out.append("}")
    return "\n".join(out) + "\n"


if __name__ == "__main__":
    (DATA / "f6_hasse.dot").write_text(normalized_dot())
