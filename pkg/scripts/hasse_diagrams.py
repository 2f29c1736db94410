"""Write DOT Hasse diagrams for a few small decomposition lattices.

Render with e.g. ``dot -Tpng out/p4.dot -o p4.png``.
"""

import argparse
from pathlib import Path

from declat.corpus import CHAIN3, I1_FAILING, NESTED, powerset_family
from declat.decomp_lattice import build_lattice
from declat.dot import hasse_dot
from declat.instances import Instance, path_tree, star, to_family
from declat.tolerance import factor_lattice, skeleton_tolerance

EXAMPLES = {
    "chain3": CHAIN3,
    "nested": NESTED,
    "i1-failing": I1_FAILING,
    "part3": powerset_family(3),
    "part4": powerset_family(4),
    "p4": Instance.graph(4, [(0, 1), (1, 2), (2, 3)]),
    "c5": Instance.graph(5, [(i, (i + 1) % 5) for i in range(5)]),
    "path4": path_tree(4),
    "star3": star(3),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("out"))
    ap.add_argument("--factor", action="store_true", help="also write the skeleton factor lattice")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, inst in EXAMPLES.items():
        L = build_lattice(to_family(inst)).lattice
        (args.out / f"{name}.dot").write_text(hasse_dot(L, name.replace("-", "_")))
        line = f"{name:<12} |D|={L.size:<4} covers={len(L.covers)}"
        if args.factor:
            Q = factor_lattice(skeleton_tolerance(L))
            (args.out / f"{name}_factor.dot").write_text(hasse_dot(Q, "factor"))
            line += f" skeleton blocks={Q.size}"
        print(line)


if __name__ == "__main__":
    main()
