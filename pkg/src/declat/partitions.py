"""Partitions of ``{0..n-1}`` and the refinement lattice Part(V)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from collections.abc import Iterable

from .bits import elements, full, lowest, mask_of
from .errors import DomainError


@dataclass(frozen=True)
class Partition:
    """Canonical partition: blocks are bitmasks ordered by least element."""

    n: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        seen = 0
        for b in self.blocks:
            if b <= 0:
                raise DomainError("partition blocks must be nonempty")
            if b & seen:
                raise DomainError("partition blocks overlap")
            seen |= b
        if seen != full(self.n):
            raise DomainError("partition blocks do not cover the ground set")
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks, key=lowest)))

    @classmethod
    def from_lists(cls, n: int, blocks: Iterable[Iterable[int]]) -> Partition:
        return cls(n, tuple(mask_of(b) for b in blocks))

    @classmethod
    def from_label(cls, label: str) -> Partition:
        """Parse ``"01|2"`` style labels (single-digit elements only)."""
        blocks = [[int(c) for c in part] for part in label.split("|")]
        return cls.from_lists(sum(map(len, blocks)), blocks)

    @classmethod
    def bottom(cls, n: int) -> Partition:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def top(cls, n: int) -> Partition:
        return cls(n, (full(n),) if n else ())

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        """Element index -> index of its block."""
        out = [0] * self.n
        for k, b in enumerate(self.blocks):
            for i in elements(b):
                out[i] = k
        return tuple(out)

    def block_containing(self, i: int) -> int:
        return self.blocks[self.block_of[i]]

    def to_lists(self) -> list[list[int]]:
        return [list(elements(b)) for b in self.blocks]

    @property
    def label(self) -> str:
        sep = "" if self.n <= 10 else "."
        return "|".join(sep.join(map(str, elements(b))) for b in self.blocks)

    def sort_key(self):
        return (-len(self.blocks), tuple(elements(b) for b in self.blocks))

    def __str__(self):
        return self.label

    def __len__(self):
        return len(self.blocks)


def _same_size(p: Partition, q: Partition):
    if p.n != q.n:
        raise DomainError(f"partitions of different ground sets ({p.n} vs {q.n})")


def refines(p: Partition, q: Partition) -> bool:
    """p <= q: every block of p lies inside a block of q."""
    _same_size(p, q)
    for b in p.blocks:
        if b & ~q.block_containing(lowest(b)):
            return False
    return True


def meet_partition(p: Partition, q: Partition) -> Partition:
    _same_size(p, q)
    return Partition(p.n, tuple(a & b for a in p.blocks for b in q.blocks if a & b))


def join_partition(p: Partition, q: Partition) -> Partition:
    _same_size(p, q)
    blocks = list(p.blocks)
    for b in q.blocks:
        merged = b
        rest = []
        for a in blocks:
            if a & merged:
                merged |= a
            else:
                rest.append(a)
        rest.append(merged)
        blocks = rest
    return Partition(p.n, tuple(blocks))


def pi_A(n: int, A) -> Partition:
    """The partition with the single block A and singletons elsewhere."""
    a = mask_of(A)
    if a == 0:
        raise DomainError("pi_A needs a nonempty set")
    if a & ~full(n):
        raise DomainError("set leaves the ground set")
    return Partition(n, (a,) + tuple(1 << i for i in range(n) if not a >> i & 1))
