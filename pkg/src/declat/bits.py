"""Subsets of ``{0..n-1}`` as int bitmasks."""

from collections.abc import Iterable


def mask_of(items: Iterable[int] | int) -> int:
    if isinstance(items, int):
        return items
    m = 0
    for i in items:
        if i < 0:
            raise ValueError(f"negative element {i}")
        m |= 1 << i
    return m


def elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    """Index of the least element of a nonempty mask."""
    return (mask & -mask).bit_length() - 1


def full(n: int) -> int:
    return (1 << n) - 1


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    # size first, then lexicographic on the sorted elements
    return popcount(mask), elements(mask)


def fmt(mask: int) -> str:
    return "{" + ",".join(map(str, elements(mask))) + "}"


def compress(mask: int, support: int) -> int:
    """Re-index ``mask & support`` onto positions 0..|support|-1."""
    out = 0
    for k, i in enumerate(elements(support)):
        if mask >> i & 1:
            out |= 1 << k
    return out


def expand(mask: int, support: int) -> int:
    """Inverse of :func:`compress`."""
    out = 0
    for k, i in enumerate(elements(support)):
        if mask >> k & 1:
            out |= 1 << i
    return out
