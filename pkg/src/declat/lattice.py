"""Finite lattices given by an order matrix plus join/meet tables."""

from __future__ import annotations

from functools import cached_property, reduce
from collections.abc import Iterable, Sequence

import networkx as nx
import numpy as np

from .errors import InvariantError, NotALatticeError


def transitive_closure(n: int, pairs: Iterable[tuple[int, int]]) -> np.ndarray:
    leq = np.eye(n, dtype=bool)
    for a, b in pairs:
        leq[a, b] = True
    # Warshall
    for k in range(n):
        leq |= leq[:, k, None] & leq[None, k, :]
    return leq


def check_partial_order(leq: np.ndarray):
    n = leq.shape[0]
    if not leq[np.arange(n), np.arange(n)].all():
        raise NotALatticeError("order is not reflexive")
    anti = leq & leq.T & ~np.eye(n, dtype=bool)
    if anti.any():
        a, b = map(int, np.argwhere(anti)[0])
        raise NotALatticeError("order is not antisymmetric", (a, b))
    li = leq.astype(np.int64)
    bad = ((li @ li) > 0) & ~leq
    if bad.any():
        a, b = map(int, np.argwhere(bad)[0])
        raise NotALatticeError("order is not transitive", (a, b))


def bounds_from_order(leq: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Join and meet tables of a finite order, or NotALatticeError.

    An upper bound u of {a, b} is least iff every element above u is an upper
    bound, i.e. iff |up(u)| equals the number of upper bounds.
    """
    n = leq.shape[0]
    join = np.empty((n, n), dtype=np.int64)
    meet = np.empty((n, n), dtype=np.int64)
    geq = leq.T
    up_count = leq.sum(axis=1)
    down_count = leq.sum(axis=0)
    for table, rel, count, word in ((join, leq, up_count, "upper"), (meet, geq, down_count, "lower")):
        for a in range(n):
            ub = rel[a][None, :] & rel
            nub = ub.sum(axis=1)
            least = ub & (count[None, :] == nub[:, None])
            hits = least.sum(axis=1)
            if (hits != 1).any():
                b = int(np.flatnonzero(hits != 1)[0])
                raise NotALatticeError(f"elements {a} and {b} have no least {word} bound", (a, b))
            table[a] = least.argmax(axis=1)
    return join, meet


class FiniteLattice:
    """A finite lattice over element indices ``0..size-1``.

    ``elements`` holds arbitrary payloads (partitions, labels, blocks); all
    operations work on indices. Construction verifies the order and both
    tables against order-derived bounds.
    """

    def __init__(self, elements: Sequence, leq: np.ndarray, join: np.ndarray, meet: np.ndarray,
                 labels: Sequence[str] | None = None, verify: bool = True):
        self.elements = list(elements)
        self.leq = np.asarray(leq, dtype=bool)
        self.join_table = np.asarray(join, dtype=np.int64)
        self.meet_table = np.asarray(meet, dtype=np.int64)
        self.labels = list(labels) if labels is not None else [str(e) for e in self.elements]
        n = len(self.elements)
        if self.leq.shape != (n, n) or self.join_table.shape != (n, n) or self.meet_table.shape != (n, n):
            raise InvariantError("table shapes do not match the element count")
        if n == 0:
            raise NotALatticeError("a lattice needs at least one element")
        if verify:
            self.verify()
        self._index = None

    @classmethod
    def from_leq(cls, elements: Sequence, leq, labels=None) -> FiniteLattice:
        leq = np.asarray(leq, dtype=bool)
        check_partial_order(leq)
        join, meet = bounds_from_order(leq)
        return cls(elements, leq, join, meet, labels, verify=False)

    @classmethod
    def from_covers(cls, elements: Sequence, pairs: Iterable[tuple[int, int]], labels=None) -> FiniteLattice:
        return cls.from_leq(elements, transitive_closure(len(elements), pairs), labels)

    def verify(self):
        check_partial_order(self.leq)
        join, meet = bounds_from_order(self.leq)
        if not np.array_equal(join, self.join_table):
            a, b = map(int, np.argwhere(join != self.join_table)[0])
            raise InvariantError(f"join table disagrees with the order at ({a}, {b})")
        if not np.array_equal(meet, self.meet_table):
            a, b = map(int, np.argwhere(meet != self.meet_table)[0])
            raise InvariantError(f"meet table disagrees with the order at ({a}, {b})")

    def __len__(self):
        return len(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return (self.elements == other.elements and np.array_equal(self.leq, other.leq)
                and np.array_equal(self.join_table, other.join_table)
                and np.array_equal(self.meet_table, other.meet_table))

    __hash__ = None

    def index(self, payload) -> int:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.elements)}
        return self._index[payload]

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def lt(self, a: int, b: int) -> bool:
        return a != b and bool(self.leq[a, b])

    def join(self, a: int, b: int) -> int:
        return int(self.join_table[a, b])

    def meet(self, a: int, b: int) -> int:
        return int(self.meet_table[a, b])

    def join_all(self, items: Iterable[int]) -> int:
        return reduce(self.join, items, self.bottom)

    def meet_all(self, items: Iterable[int]) -> int:
        return reduce(self.meet, items, self.top)

    @cached_property
    def bottom(self) -> int:
        return int(np.flatnonzero(self.leq.all(axis=1))[0])

    @cached_property
    def top(self) -> int:
        return int(np.flatnonzero(self.leq.all(axis=0))[0])

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        lt = self.leq & ~np.eye(self.size, dtype=bool)
        li = lt.astype(np.int64)
        return lt & ~((li @ li) > 0)

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        return [(int(a), int(b)) for a, b in np.argwhere(self.cover_matrix)]

    def covered_by(self, a: int, b: int) -> bool:
        """a is covered by b (a < b with nothing strictly between)."""
        return bool(self.cover_matrix[a, b])

    @cached_property
    def lower_covers(self) -> list[list[int]]:
        return [np.flatnonzero(self.cover_matrix[:, b]).tolist() for b in range(self.size)]

    @cached_property
    def upper_covers(self) -> list[list[int]]:
        return [np.flatnonzero(self.cover_matrix[a]).tolist() for a in range(self.size)]

    @cached_property
    def atoms(self) -> list[int]:
        return self.upper_covers[self.bottom]

    @cached_property
    def coatoms(self) -> list[int]:
        return self.lower_covers[self.top]

    @cached_property
    def height(self) -> list[int]:
        """Length of the longest chain from bottom to each element."""
        h = [0] * self.size
        order = np.argsort(self.leq.sum(axis=0), kind="stable")
        for b in order:
            for a in self.lower_covers[b]:
                h[b] = max(h[b], h[a] + 1)
        return h

    def interval(self, u: int, v: int) -> FiniteLattice:
        """The order interval [u, v] with the inherited operations."""
        if not self.leq[u, v]:
            raise ValueError(f"{u} is not below {v}")
        members = np.flatnonzero(self.leq[u] & self.leq[:, v])
        pos = {int(x): k for k, x in enumerate(members)}
        sub = np.ix_(members, members)
        join = np.vectorize(pos.__getitem__, otypes=[np.int64])(self.join_table[sub])
        meet = np.vectorize(pos.__getitem__, otypes=[np.int64])(self.meet_table[sub])
        return FiniteLattice([int(x) for x in members], self.leq[sub], join, meet,
                             [self.labels[int(x)] for x in members], verify=False)

    def dual(self) -> FiniteLattice:
        return FiniteLattice(self.elements, self.leq.T.copy(), self.meet_table.copy(),
                             self.join_table.copy(), self.labels, verify=False)

    def hasse_graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.size))
        g.add_edges_from(self.covers)
        return g

    def is_isomorphic(self, other: FiniteLattice) -> bool:
        return self.size == other.size and nx.is_isomorphic(self.hasse_graph(), other.hasse_graph())

    def __repr__(self):
        return f"FiniteLattice(size={self.size}, covers={len(self.covers)})"


def chain(k: int) -> FiniteLattice:
    return FiniteLattice.from_covers(list(range(k)), [(i, i + 1) for i in range(k - 1)],
                                     [str(i) for i in range(k)])


def n5() -> FiniteLattice:
    """The pentagon 0 < a < c < 1, 0 < b < 1."""
    names = ["0", "a", "b", "c", "1"]
    return FiniteLattice.from_covers(names, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)], names)


def m3() -> FiniteLattice:
    names = ["0", "a", "b", "c", "1"]
    return FiniteLattice.from_covers(names, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], names)


def boolean_lattice(k: int) -> FiniteLattice:
    masks = list(range(1 << k))
    return FiniteLattice.from_leq(masks, [[a & ~b == 0 for b in masks] for a in masks],
                                  ["{" + ",".join(str(i) for i in range(k) if m >> i & 1) + "}" for m in masks])
