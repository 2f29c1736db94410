from __future__ import annotations

from collections import defaultdict

from .lattice import FiniteLattice


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(L: FiniteLattice, name: str = "hasse") -> str:
    """Hasse diagram with edges from lower to upper cover, ranked by height."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, lab in enumerate(L.labels):
        lines.append(f"  n{i} [label={_quote(lab)}];")
    for a, b in L.covers:
        lines.append(f"  n{a} -> n{b};")
    ranks = defaultdict(list)
    for i, h in enumerate(L.height):
        ranks[h].append(i)
    for h in sorted(ranks):
        lines.append("  { rank=same; " + " ".join(f"n{i};" for i in ranks[h]) + " }")
    lines.append("}")
    return "\n".join(lines) + "\n"
