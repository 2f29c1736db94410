"""Join- and meet-irreducible decompositions and their characterization by strong sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .bits import elements, expand, mask_of
from .caps import DEFAULT_CAPS, Caps
from .decomp_lattice import DecompLattice, build_lattice, enumerate_decompositions
from .errors import DomainError, MembershipError, PreconditionError
from .lattice import FiniteLattice
from .partitions import Partition, pi_A, refines
from .set_family import SetFamily, check_axioms, is_strong_set, restrict


def join_irreducibles_bruteforce(L: FiniteLattice) -> list[int]:
    """Non-bottom elements with a single lower cover."""
    return [j for j in range(L.size) if j != L.bottom and len(L.lower_covers[j]) == 1]


def meet_irreducibles_bruteforce(L: FiniteLattice) -> list[int]:
    return [m for m in range(L.size) if m != L.top and len(L.upper_covers[m]) == 1]


def lower_star(L: FiniteLattice, a: int) -> int:
    """Join of everything strictly below a."""
    if a == L.bottom:
        raise DomainError("lower_star is undefined at the bottom element")
    return L.join_all(x for x in range(L.size) if L.lt(x, a))


def upper_star(L: FiniteLattice, a: int) -> int:
    """Meet of everything strictly above a."""
    if a == L.top:
        raise DomainError("upper_star is undefined at the top element")
    return L.meet_all(x for x in range(L.size) if L.lt(a, x))


@lru_cache(maxsize=4096)
def _gpd(F: SetFamily, a: int, caps: Caps) -> tuple[int, ...] | None:
    if a & (a - 1) == 0:
        return None
    sub = restrict(F, a)
    decomps = enumerate_decompositions(sub, caps)
    top = Partition.top(sub.n)
    proper = [p for p in decomps if p != top]
    # coatoms of the restricted lattice = maximal proper decompositions
    maximal = [p for p in proper if not any(q != p and refines(p, q) for q in proper)]
    if len(maximal) != 1:
        return None
    return tuple(expand(b, a) for b in maximal[0].blocks)


def greatest_proper_decomposition(F: SetFamily, A, caps: Caps = DEFAULT_CAPS) -> tuple[int, ...] | None:
    """Blocks (as masks in the original ground set) of the greatest proper
    decomposition of A, or None if A has none."""
    a = mask_of(A)
    if a not in F.members:
        raise MembershipError(f"{list(elements(a))} is not a member of the family")
    if a == 0:
        raise DomainError("the empty set has no decompositions")
    return _gpd(F, a, caps)


@dataclass(frozen=True)
class CharacterizedIrreducible:
    A: int
    gpd: tuple[int, ...]
    element: Partition

    def to_json(self) -> dict:
        return {
            "A": list(elements(self.A)),
            "gpd": [list(elements(b)) for b in self.gpd],
            "element": self.element.to_lists(),
            "label": self.element.label,
        }


def join_irreducibles_characterized(F: SetFamily, caps: Caps = DEFAULT_CAPS) -> list[CharacterizedIrreducible]:
    """pi_A for every closed A with |A| >= 2 admitting a greatest proper decomposition."""
    if not check_axioms(F).holds_I0:
        raise PreconditionError("characterization requires singletons and the empty set to be closed")
    out = []
    for a in F.sets:
        if a & (a - 1) == 0:
            continue
        g = _gpd(F, a, caps)
        if g is not None:
            out.append(CharacterizedIrreducible(a, g, pi_A(F.n, a)))
    return out


def _require_interval_system(F: SetFamily):
    rep = check_axioms(F)
    if not rep.is_interval_system:
        raise PreconditionError(f"not an interval system: {sorted(rep.witnesses)} fail")


def verify_gpd_blocks_strong(F: SetFamily, caps: Caps = DEFAULT_CAPS) -> bool:
    """In an interval system every block of a greatest proper decomposition is
    strong, and A itself is strong when that decomposition has >= 3 blocks."""
    _require_interval_system(F)
    for c in join_irreducibles_characterized(F, caps):
        if not all(is_strong_set(F, b) for b in c.gpd):
            return False
        if len(c.gpd) >= 3 and not is_strong_set(F, c.A):
            return False
    return True


def verify_lower_star_strong(F: SetFamily, D: DecompLattice | None = None, caps: Caps = DEFAULT_CAPS) -> bool:
    """j_* is a strong decomposition for every join-irreducible j."""
    _require_interval_system(F)
    D = D or build_lattice(F, caps)
    L = D.lattice
    for j in join_irreducibles_bruteforce(L):
        if not all(is_strong_set(F, b) for b in L.elements[lower_star(L, j)].blocks):
            return False
    return True


@dataclass
class IrreducibleReport:
    join_irreducibles: list[int]
    meet_irreducibles: list[int]
    lower_star: dict[int, int]
    upper_star: dict[int, int]
    characterized: list[CharacterizedIrreducible] = field(default_factory=list)

    def to_json(self, L: FiniteLattice) -> dict:
        lab = L.labels
        return {
            "schema": "declat/1",
            "join_irreducibles": [lab[j] for j in self.join_irreducibles],
            "meet_irreducibles": [lab[m] for m in self.meet_irreducibles],
            "lower_star": {lab[j]: lab[s] for j, s in self.lower_star.items()},
            "upper_star": {lab[m]: lab[s] for m, s in self.upper_star.items()},
            "characterized": [c.to_json() for c in self.characterized],
        }


def irreducible_report(D: DecompLattice, caps: Caps = DEFAULT_CAPS) -> IrreducibleReport:
    L = D.lattice
    J = join_irreducibles_bruteforce(L)
    M = meet_irreducibles_bruteforce(L)
    chars = join_irreducibles_characterized(D.family, caps) if check_axioms(D.family).holds_I0 else []
    return IrreducibleReport(J, M, {j: lower_star(L, j) for j in J}, {m: upper_star(L, m) for m in M}, chars)
