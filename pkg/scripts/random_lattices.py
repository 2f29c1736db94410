"""Property statistics on lattices of random intersection-closed families.

These lattices are mostly not decomposition lattices, so they probe which
of the checked implications are special.  Prints a contingency summary:
how often semimodularity, the replacement property, consistency, strength
and balance hold, and whether the observed equivalences ever break.
"""

import argparse
from collections import Counter

import numpy as np

from declat.lattice import FiniteLattice
from declat.lattice_props import (has_join_korp, is_balanced, is_consistent, is_dually_strong,
                                  is_semimodular, is_strong_lattice)


def random_closure_lattice(rng, max_n, max_gens):
    n = int(rng.integers(1, max_n + 1))
    gens = rng.integers(0, 1 << n, size=int(rng.integers(0, max_gens + 1)))
    sets = {(1 << n) - 1, *map(int, gens)}
    grew = True
    while grew:
        new = {a & b for a in sets for b in sets} - sets
        sets |= new
        grew = bool(new)
    S = sorted(sets)
    return FiniteLattice.from_leq(S, [[a & ~b == 0 for b in S] for a in S])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=400)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--max-gens", type=int, default=7)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    tally = Counter()
    breaks = Counter()
    for _ in range(args.count):
        L = random_closure_lattice(rng, args.max_n, args.max_gens)
        f = {"semimodular": is_semimodular(L), "korp": has_join_korp(L), "consistent": is_consistent(L),
             "strong": is_strong_lattice(L), "dually_strong": is_dually_strong(L), "balanced": is_balanced(L)}
        tally.update(k for k, v in f.items() if v)
        tally["lattices"] += 1
        breaks["korp <=> consistent"] += f["korp"] != f["consistent"]
        breaks["balanced <=> strong and dually strong"] += f["balanced"] != (f["strong"] and f["dually_strong"])
        if f["semimodular"]:
            tally["semimodular, all four agree"] += len({f["korp"], f["consistent"], f["strong"], f["balanced"]}) == 1

    n = tally.pop("lattices")
    print(f"{n} random closure lattices (seed {args.seed})")
    for k, v in tally.items():
        print(f"  {k:<30} {v:>5}")
    print("counterexamples to observed equivalences:")
    for k, v in breaks.items():
        print(f"  {k:<40} {v:>5}")


if __name__ == "__main__":
    main()
