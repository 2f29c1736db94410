"""Enumeration of decompositions of a closure system and the lattice they form."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bits import lowest
from .caps import DEFAULT_CAPS, Caps
from .errors import InvariantError, PreconditionError, ResourceError
from .lattice import FiniteLattice, bounds_from_order, check_partial_order
from .partitions import Partition, join_partition, meet_partition, pi_A, refines
from .set_family import SetFamily, check_axioms, validate_closure_system


def enumerate_decompositions(F: SetFamily, caps: Caps = DEFAULT_CAPS) -> list[Partition]:
    """All partitions of V whose blocks are members of F.

    Blocks are chosen by always covering the least uncovered element, so
    only genuine partitions are generated. Result is sorted with the finest
    partitions first.
    """
    if F.ground not in F.members:
        raise PreconditionError("family does not contain V")
    n = F.n
    containing = [[s for s in F.sets if s >> i & 1] for i in range(n)]
    out: list[Partition] = []
    chosen: list[int] = []

    def extend(uncovered: int):
        if not uncovered:
            if len(out) >= caps.max_lattice:
                raise ResourceError("max_lattice", caps.max_lattice,
                                    f"more than {caps.max_lattice} decompositions (cap max_lattice)")
            out.append(Partition(n, tuple(chosen)))
            return
        for s in containing[lowest(uncovered)]:
            if s & ~uncovered == 0:
                chosen.append(s)
                extend(uncovered & ~s)
                chosen.pop()

    extend(F.ground)
    out.sort(key=Partition.sort_key)
    return out


@dataclass
class DecompLattice:
    family: SetFamily
    lattice: FiniteLattice
    is_sublattice_of_part_v: bool

    @property
    def elements(self) -> list[Partition]:
        return self.lattice.elements

    def index(self, p: Partition) -> int:
        return self.lattice.index(p)

    def __len__(self):
        return self.lattice.size


def build_lattice(F: SetFamily, caps: Caps = DEFAULT_CAPS) -> DecompLattice:
    """The lattice D(V, F) of decompositions under refinement.

    Meets are Part(V) meets. Joins are Part(V) joins whenever those land in
    D; otherwise they are the least upper bound inside D, which must exist
    and be unique (NotALatticeError otherwise).
    """
    report = validate_closure_system(F)
    if not report.is_closure_system:
        raise PreconditionError(f"not a closure system: {report.witnesses['closure']!r}")
    elems = enumerate_decompositions(F, caps)
    idx = {p: i for i, p in enumerate(elems)}
    n = len(elems)
    leq = np.array([[refines(p, q) for q in elems] for p in elems], dtype=bool).reshape(n, n)
    check_partial_order(leq)
    join, meet = bounds_from_order(leq)
    sublattice = True
    for a in range(n):
        for b in range(a, n):
            m = idx.get(meet_partition(elems[a], elems[b]))
            if m is None or m != meet[a, b]:
                raise InvariantError(f"meet of {elems[a]} and {elems[b]} is not the Part(V) meet")
            j = idx.get(join_partition(elems[a], elems[b]))
            if j is None:
                sublattice = False
            elif j != join[a, b]:
                raise InvariantError(f"join of {elems[a]} and {elems[b]} disagrees with Part(V)")
    lat = FiniteLattice(elems, leq, join, meet, [p.label for p in elems], verify=False)
    return DecompLattice(F, lat, sublattice)


def verify_generation(D: DecompLattice) -> bool:
    """Every decomposition is the join of the pi_A of its blocks."""
    if not check_axioms(D.family).holds_I0:
        raise PreconditionError("generation by pi_A requires singletons and the empty set")
    L = D.lattice
    for i, p in enumerate(D.elements):
        if L.join_all(D.index(pi_A(p.n, b)) for b in p.blocks) != i:
            return False
    return True


def merged_blocks(lower: Partition, upper: Partition) -> list[int]:
    """Blocks of ``upper`` that are not blocks of ``lower``."""
    lo = set(lower.blocks)
    return [b for b in upper.blocks if b not in lo]


def verify_cover_structure(D: DecompLattice) -> bool:
    """Each cover merges exactly one block from at least two lower blocks."""
    L = D.lattice
    for a, b in L.covers:
        lower, upper = L.elements[a], L.elements[b]
        merged = merged_blocks(lower, upper)
        if len(merged) != 1:
            return False
        parts = [c for c in lower.blocks if c & merged[0]]
        if len(parts) < 2 or any(c & ~merged[0] for c in parts):
            return False
    return True


def lattice_to_json(D: DecompLattice) -> dict:
    L = D.lattice
    return {
        "schema": "declat/1",
        "type": "lattice",
        "n": D.family.n,
        "elements": [p.to_lists() for p in L.elements],
        "labels": L.labels,
        "covers": [list(c) for c in L.covers],
        "bottom": L.bottom,
        "top": L.top,
        "is_sublattice_of_part_v": D.is_sublattice_of_part_v,
    }

