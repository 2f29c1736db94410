"""Tolerances of finite lattices, the skeleton tolerance and its blocks.

A tolerance T relates a and b iff it relates a∧b and a∨b, and then it
relates every pair inside [a∧b, a∨b]. So T is fixed by the maximal
intervals [u, v] with (u, v) in T, and closing a seed only needs joins and
meets of those intervals. :func:`tolerance_closure_naive` is the plain
pairwise worklist and serves as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable

import networkx as nx
import numpy as np

from .caps import DEFAULT_CAPS, Caps
from .errors import InvariantError, NotALatticeError
from .lattice import FiniteLattice, bounds_from_order
from .lattice_props import is_geometric


@dataclass(frozen=True)
class Block:
    lo: int
    hi: int
    members: tuple[int, ...]


@dataclass
class ToleranceRel:
    lattice: FiniteLattice
    rel: np.ndarray

    def __post_init__(self):
        self.rel = np.asarray(self.rel, dtype=bool)

    def __contains__(self, pair) -> bool:
        a, b = pair
        return bool(self.rel[a, b])

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(a), int(b)) for a, b in np.argwhere(self.rel)]

    def is_reflexive(self) -> bool:
        return bool(np.diag(self.rel).all())

    def is_symmetric(self) -> bool:
        return bool((self.rel == self.rel.T).all())

    def is_compatible(self) -> bool:
        J, M = self.lattice.join_table, self.lattice.meet_table
        P = np.argwhere(self.rel)
        for a, b in P:
            if not self.rel[J[a, P[:, 0]], J[b, P[:, 1]]].all():
                return False
            if not self.rel[M[a, P[:, 0]], M[b, P[:, 1]]].all():
                return False
        return True

    def is_tolerance(self) -> bool:
        return self.is_reflexive() and self.is_symmetric() and self.is_compatible()

    def __eq__(self, other):
        return isinstance(other, ToleranceRel) and self.lattice is other.lattice and np.array_equal(self.rel, other.rel)


def tolerance_closure(L: FiniteLattice, seed: Iterable[tuple[int, int]] = ()) -> ToleranceRel:
    """Least tolerance of L containing ``seed``.

    For u <= v, (u, v) is already related iff [u, v] sits inside a known
    interval, so containment is a table lookup. New intervals are combined
    with every known one until nothing new appears.
    """
    n = L.size
    J, M = L.join_table, L.meet_table
    rel = np.eye(n, dtype=bool)
    us = list(range(n))
    vs = list(range(n))
    frontier: list[tuple[int, int]] = []

    def add(u: int, v: int):
        if rel[u, v]:
            return
        inside = np.flatnonzero(L.leq[u] & L.leq[:, v])
        rel[np.ix_(inside, inside)] = True
        us.append(u)
        vs.append(v)
        frontier.append((u, v))

    for a, b in seed:
        add(L.meet(a, b), L.join(a, b))
    while frontier:
        u, v = frontier.pop()
        U, V = np.array(us), np.array(vs)
        for cu, cv in ((J[u, U], J[v, V]), (M[u, U], M[v, V])):
            fresh = ~rel[cu, cv]
            for x, y in zip(cu[fresh].tolist(), cv[fresh].tolist()):
                add(x, y)
    return ToleranceRel(L, rel)


def tolerance_closure_naive(L: FiniteLattice, seed: Iterable[tuple[int, int]] = ()) -> ToleranceRel:
    """Fixpoint of componentwise joins and meets over all related pairs."""
    n = L.size
    rel = np.eye(n, dtype=bool)
    for a, b in seed:
        rel[a, b] = rel[b, a] = True
    J, M = L.join_table, L.meet_table
    frontier = np.argwhere(rel)
    while len(frontier):
        P = np.argwhere(rel)
        before = rel.copy()
        for a, b in frontier:
            rel[J[a, P[:, 0]], J[b, P[:, 1]]] = True
            rel[M[a, P[:, 0]], M[b, P[:, 1]]] = True
        rel |= rel.T
        frontier = np.argwhere(rel & ~before)
    return ToleranceRel(L, rel)


def skeleton_tolerance(L: FiniteLattice) -> ToleranceRel:
    return tolerance_closure(L, L.covers)


def is_glued_tolerance(T: ToleranceRel) -> bool:
    return all(T.rel[a, b] for a, b in T.lattice.covers)


def _is_maximal_clique(rel: np.ndarray, members: np.ndarray) -> bool:
    inside = np.zeros(rel.shape[0], dtype=bool)
    inside[members] = True
    if not rel[np.ix_(members, members)].all():
        return False
    outside_ok = rel[:, members].all(axis=1) & ~inside
    return not outside_ok.any()


def blocks(T: ToleranceRel, caps: Caps = DEFAULT_CAPS) -> list[Block]:
    """Maximal T-complete subsets, each checked to be an order interval.

    Candidates are the inclusion-maximal intervals [u, v] with (u, v) in T.
    For lattices up to ``caps.max_clique_oracle`` elements the result is
    compared with an exhaustive maximal-clique search.
    """
    L = T.lattice
    rel = T.rel
    pairs = np.argwhere(rel & L.leq)
    li = L.leq.astype(np.int64)
    sizes = li @ li  # sizes[u, v] = |[u, v]|
    order = sorted(((int(u), int(v)) for u, v in pairs), key=lambda p: (-sizes[p], p))
    accepted: list[tuple[int, int]] = []
    for u, v in order:
        if any(L.leq[u2, u] and L.leq[v, v2] for u2, v2 in accepted):
            continue
        members = np.flatnonzero(L.leq[u] & L.leq[:, v])
        if not rel[np.ix_(members, members)].all():
            continue
        accepted.append((u, v))
    out = []
    for u, v in sorted(accepted):
        members = np.flatnonzero(L.leq[u] & L.leq[:, v])
        if not _is_maximal_clique(rel, members):
            raise InvariantError(f"interval [{L.labels[u]}, {L.labels[v]}] is not a maximal related set")
        out.append(Block(u, v, tuple(int(m) for m in members)))
    if L.size <= caps.max_clique_oracle:
        g = nx.Graph()
        g.add_nodes_from(range(L.size))
        g.add_edges_from((int(a), int(b)) for a, b in np.argwhere(np.triu(rel, 1)))
        cliques = {tuple(sorted(c)) for c in nx.find_cliques(g)}
        if cliques != {b.members for b in out}:
            bad = sorted(cliques - {b.members for b in out})
            raise InvariantError(f"maximal related set {bad[:1]} is not an order interval")
    return out


def factor_lattice(T: ToleranceRel, caps: Caps = DEFAULT_CAPS) -> FiniteLattice:
    """Blocks ordered by [u1, v1] <= [u2, v2] iff u1 <= u2 and v1 <= v2."""
    L = T.lattice
    bs = blocks(T, caps)
    leq = np.array([[L.leq[a.lo, b.lo] and L.leq[a.hi, b.hi] for b in bs] for a in bs], dtype=bool)
    leq = leq.reshape(len(bs), len(bs))
    try:
        join, meet = bounds_from_order(leq)
    except NotALatticeError as e:
        raise NotALatticeError(f"block order is not a lattice: {e}", e.witness) from e
    labels = [f"[{L.labels[b.lo]},{L.labels[b.hi]}]" for b in bs]
    return FiniteLattice(bs, leq, join, meet, labels)


def glued_violation(L: FiniteLattice, caps: Caps = DEFAULT_CAPS) -> Block | None:
    """First skeleton block whose interval is not a geometric lattice."""
    for b in blocks(skeleton_tolerance(L), caps):
        if not is_geometric(L.interval(b.lo, b.hi)):
            return b
    return None


def is_glued_by_geometric(L: FiniteLattice, caps: Caps = DEFAULT_CAPS) -> bool:
    return glued_violation(L, caps) is None


def blocks_to_json(T: ToleranceRel, caps: Caps = DEFAULT_CAPS) -> list[dict]:
    lab = T.lattice.labels
    return [{"lo": lab[b.lo], "hi": lab[b.hi], "size": len(b.members)} for b in blocks(T, caps)]
