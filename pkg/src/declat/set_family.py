"""Finite set families over an indexed ground set and the interval-system axioms."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from collections.abc import Iterable

from .bits import canonical_key, compress, elements, full, mask_of
from .caps import DEFAULT_CAPS, Caps
from .errors import DomainError, MembershipError, PreconditionError, ResourceError

MISSING_V = "missing V"


@dataclass(frozen=True)
class SetFamily:
    """Duplicate-free family of subsets of ``{0..n-1}``.

    Members are stored as bitmasks sorted by size, then lexicographically by
    their element lists, so equal families compare and hash equal.
    """

    n: int
    sets: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("ground set size must be nonnegative")
        ground = full(self.n)
        masks = set()
        for s in self.sets:
            if s < 0 or s & ~ground:
                raise DomainError(f"member {elements(s) if s >= 0 else s} not inside ground set of size {self.n}")
            masks.add(s)
        object.__setattr__(self, "sets", tuple(sorted(masks, key=canonical_key)))

    @classmethod
    def of(cls, n: int, sets: Iterable[Iterable[int] | int], caps: Caps = DEFAULT_CAPS) -> SetFamily:
        if n > caps.max_n:
            raise ResourceError("max_n", caps.max_n, f"ground set size {n} exceeds cap max_n={caps.max_n}")
        masks = [mask_of(s) for s in sets]
        if len(masks) > caps.max_family:
            raise ResourceError("max_family", caps.max_family)
        return cls(n, tuple(masks))

    @classmethod
    def powerset(cls, n: int) -> SetFamily:
        return cls(n, tuple(range(1 << n)))

    @property
    def ground(self) -> int:
        return full(self.n)

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.sets)

    def __contains__(self, A) -> bool:
        return mask_of(A) in self.members

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def as_lists(self) -> list[list[int]]:
        return [list(elements(s)) for s in self.sets]

    def to_json(self) -> dict:
        return {"type": "family", "n": self.n, "sets": self.as_lists()}


@dataclass(frozen=True)
class AxiomReport:
    is_closure_system: bool
    holds_I0: bool
    holds_I1: bool
    holds_I2: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def is_interval_system(self) -> bool:
        return self.is_closure_system and self.holds_I0 and self.holds_I1 and self.holds_I2

    def to_json(self) -> dict:
        def enc(w):
            if isinstance(w, str):
                return w
            if isinstance(w, int):
                return list(elements(w))
            return [list(elements(x)) for x in w]

        return {
            "is_closure_system": self.is_closure_system,
            "holds_I0": self.holds_I0,
            "holds_I1": self.holds_I1,
            "holds_I2": self.holds_I2,
            "is_interval_system": self.is_interval_system,
            "witnesses": {k: enc(v) for k, v in sorted(self.witnesses.items())},
        }


def _closure_witness(F: SetFamily):
    if F.ground not in F.members:
        return MISSING_V
    sets, mem = F.sets, F.members
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            if a & b not in mem:
                return (a, b)
    return None


def _i0_witness(F: SetFamily):
    mem = F.members
    for s in [0] + [1 << i for i in range(F.n)]:
        if s not in mem:
            return s
    return None


def _i1_witness(F: SetFamily):
    sets, mem = F.sets, F.members
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            if a & b and a | b not in mem:
                return (a, b)
    return None


def _i2_witness(F: SetFamily):
    sets, mem = F.sets, F.members
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            if not a & b or a & ~b == 0 or b & ~a == 0:
                continue
            # orient the pair so that the failing difference is A \ B
            if a & ~b not in mem:
                return (a, b)
            if b & ~a not in mem:
                return (b, a)
    return None


def validate_closure_system(F: SetFamily) -> AxiomReport:
    """Check that V is a member and members are closed under pairwise intersection.

    Only ``is_closure_system`` is evaluated; the I-flags are left False with
    no witnesses. Use :func:`check_axioms` for the full report.
    """
    w = _closure_witness(F)
    return AxiomReport(w is None, False, False, False, {} if w is None else {"closure": w})


def check_axioms(F: SetFamily) -> AxiomReport:
    witnesses = {}
    for name, fn in (("closure", _closure_witness), ("I0", _i0_witness), ("I1", _i1_witness), ("I2", _i2_witness)):
        w = fn(F)
        if w is not None:
            witnesses[name] = w
    return AxiomReport(
        is_closure_system="closure" not in witnesses,
        holds_I0="I0" not in witnesses,
        holds_I1="I1" not in witnesses,
        holds_I2="I2" not in witnesses,
        witnesses=witnesses,
    )


def _member(F: SetFamily, A) -> int:
    a = mask_of(A)
    if a not in F.members:
        raise MembershipError(f"{list(elements(a))} is not a member of the family")
    return a


def is_strong_set(F: SetFamily, A) -> bool:
    a = _member(F, A)
    for b in F.sets:
        if a & b and a & ~b and b & ~a:
            return False
    return True


def strong_sets(F: SetFamily) -> SetFamily:
    w = _closure_witness(F)
    if w is not None:
        raise PreconditionError(f"not a closure system (witness {w!r})")
    return SetFamily(F.n, tuple(a for a in F.sets if is_strong_set(F, a)))


def is_proper(F: SetFamily, A) -> bool:
    """Whether A is not one of the improper sets: empty, a singleton, or V."""
    a = mask_of(A)
    return a != 0 and a != F.ground and a & (a - 1) != 0


def restrict(F: SetFamily, A) -> SetFamily:
    """The family ``{Q & A}`` re-indexed onto the elements of A in increasing order."""
    a = mask_of(A)
    if a == 0:
        raise DomainError("cannot restrict to the empty set")
    if a & ~F.ground:
        raise DomainError("restriction set leaves the ground set")
    return SetFamily(len(elements(a)), tuple({compress(q & a, a) for q in F.sets}))


def is_fragile(F: SetFamily, A) -> bool:
    a = _member(F, A)
    mem = F.members
    for b in F.sets:
        if b and b != a and b & ~a == 0 and (a & ~b) in mem:
            return True
    return False
