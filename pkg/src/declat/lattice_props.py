"""Property checkers for finite lattices.

Each ``*_violation`` function returns the first counterexample in index
order, or None when the property holds. The ``is_*`` predicates wrap them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .caps import DEFAULT_CAPS, Caps
from .decomp_lattice import DecompLattice, build_lattice
from .errors import PreconditionError, ResourceError
from .irreducibles import join_irreducibles_bruteforce, lower_star, meet_irreducibles_bruteforce, upper_star
from .lattice import FiniteLattice
from .set_family import SetFamily, check_axioms, is_proper, is_strong_set, strong_sets


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def semimodular_violation(L: FiniteLattice):
    """(a, b) with a∧b covered by a but b not covered by a∨b."""
    C = L.cover_matrix
    idx = np.arange(L.size)
    meet_below_a = C[L.meet_table, idx[:, None]]
    b_below_join = C[idx[None, :], L.join_table]
    return _first(meet_below_a & ~b_below_join)


def is_semimodular(L: FiniteLattice) -> bool:
    return semimodular_violation(L) is None


def atomistic_violation(L: FiniteLattice):
    for x in range(L.size):
        if L.join_all(a for a in L.atoms if L.leq[a, x]) != x:
            return (x,)
    return None


def dually_atomistic_violation(L: FiniteLattice):
    for x in range(L.size):
        if L.meet_all(c for c in L.coatoms if L.leq[x, c]) != x:
            return (x,)
    return None


def is_atomistic(L: FiniteLattice) -> bool:
    return atomistic_violation(L) is None


def is_dually_atomistic(L: FiniteLattice) -> bool:
    return dually_atomistic_violation(L) is None


def geometric_violation(L: FiniteLattice):
    return atomistic_violation(L) or semimodular_violation(L)


def is_geometric(L: FiniteLattice) -> bool:
    return is_atomistic(L) and is_semimodular(L)


def distributive_violation(L: FiniteLattice):
    """(x, y, z) with x∧(y∨z) != (x∧y)∨(x∧z)."""
    J, M = L.join_table, L.meet_table
    for x in range(L.size):
        lhs = M[x][J]
        rhs = J[M[x][:, None], M[x][None, :]]
        w = _first(lhs != rhs)
        if w is not None:
            return (x,) + w
    return None


def is_distributive(L: FiniteLattice) -> bool:
    return distributive_violation(L) is None


def standard_identity_holds(L: FiniteLattice, a: int, x: int, y: int) -> bool:
    return L.meet(x, L.join(a, y)) == L.join(L.meet(x, a), L.meet(x, y))


def standard_violation(L: FiniteLattice, a: int):
    """(x, y) with x∧(a∨y) != (x∧a)∨(x∧y)."""
    J, M = L.join_table, L.meet_table
    lhs = M[np.arange(L.size)[:, None], J[a][None, :]]
    rhs = J[M[:, a][:, None], M]
    return _first(lhs != rhs)


def is_standard_element(L: FiniteLattice, a: int) -> bool:
    return standard_violation(L, a) is None


def standard_elements(L: FiniteLattice) -> list[int]:
    return [a for a in range(L.size) if is_standard_element(L, a)]


def strong_violation(L: FiniteLattice):
    """(j, x) with j <= j_*∨x but not j <= x."""
    for j in join_irreducibles_bruteforce(L):
        s = lower_star(L, j)
        bad = L.leq[j, L.join_table[s]] & ~L.leq[j]
        w = _first(bad)
        if w is not None:
            return (j, w[0])
    return None


def is_strong_lattice(L: FiniteLattice) -> bool:
    return strong_violation(L) is None


def is_dually_strong(L: FiniteLattice) -> bool:
    return strong_violation(L.dual()) is None


def consistent_violation(L: FiniteLattice):
    """(j, x) such that x∨j is not join-irreducible in [x, 1].

    When j <= x the join is x itself, the bottom of [x, 1]; that case is
    taken as satisfied, otherwise no lattice with a join-irreducible would be
    consistent. Covers inside [x, 1] are covers of L, the interval being convex.
    """
    for j in join_irreducibles_bruteforce(L):
        for x in range(L.size):
            y = L.join(x, j)
            if y != x and sum(1 for c in L.lower_covers[y] if L.leq[x, c]) != 1:
                return (j, x)
    return None


def is_consistent(L: FiniteLattice) -> bool:
    return consistent_violation(L) is None


def balanced_violation(L: FiniteLattice):
    """(j, m) with j not below m where exactly one of j∨m = m^*, j∧m = j_* holds."""
    M = meet_irreducibles_bruteforce(L)
    mstar = {m: upper_star(L, m) for m in M}
    for j in join_irreducibles_bruteforce(L):
        js = lower_star(L, j)
        for m in M:
            if L.leq[j, m]:
                continue
            if (L.join(j, m) == mstar[m]) != (L.meet(j, m) == js):
                return (j, m)
    return None


def is_balanced(L: FiniteLattice) -> bool:
    return balanced_violation(L) is None


def irredundant_decompositions(L: FiniteLattice, caps: Caps = DEFAULT_CAPS) -> dict[int, list[tuple[int, ...]]]:
    """Irredundant joins of join-irreducibles, grouped by their value.

    Irredundancy is hereditary and comparable members are always redundant,
    so the search only extends irredundant antichains.
    """
    J = join_irreducibles_bruteforce(L)
    groups: dict[int, list[tuple[int, ...]]] = {}
    cap = caps.max_korp_size

    def irredundant(S, value):
        for i in range(len(S)):
            if L.join_all(S[:i] + S[i + 1:]) == value:
                return False
        return True

    def extend(S: tuple[int, ...], value: int, start: int):
        groups.setdefault(value, []).append(S)
        for k in range(start, len(J)):
            j = J[k]
            if L.leq[j, value]:
                continue
            new = L.join(value, j)
            T = S + (j,)
            if irredundant(T, new):
                if len(S) >= cap:
                    raise ResourceError("max_korp_size", cap,
                                        f"irredundant decompositions longer than {cap} (cap max_korp_size)")
                extend(T, new, k + 1)

    for k, j in enumerate(J):
        extend((j,), j, k + 1)
    return groups


def korp_violation(L: FiniteLattice, caps: Caps = DEFAULT_CAPS):
    """(a, D1, j, D2): j in D1 can be replaced by no member of D2."""
    J = join_irreducibles_bruteforce(L)
    pos = {j: k for k, j in enumerate(J)}
    dtype = np.uint64 if len(J) <= 64 else object
    for a, decs in sorted(irredundant_decompositions(L, caps).items()):
        if len(decs) < 2:
            continue
        masks = np.array([sum(1 << pos[j] for j in d) for d in decs], dtype=dtype)
        for D1 in decs:
            for i, j in enumerate(D1):
                rest = L.join_all(D1[:i] + D1[i + 1:])
                ok = np.flatnonzero(L.join_table[rest][J] == a) if J else []
                R = sum(1 << int(k) for k in ok)
                hit = (masks & dtype(R)) if dtype is np.uint64 else masks & R
                missing = np.flatnonzero(hit == 0)
                if len(missing):
                    return (a, D1, j, decs[int(missing[0])])
    return None


def has_join_korp(L: FiniteLattice, caps: Caps = DEFAULT_CAPS) -> bool:
    return korp_violation(L, caps) is None


PROPERTIES = ("semimodular", "atomistic", "dually_atomistic", "geometric", "distributive",
              "strong", "dually_strong", "consistent", "balanced", "korp")


def _dually_strong_violation(L):
    return strong_violation(L.dual())


_CHECKERS = {
    "semimodular": semimodular_violation,
    "atomistic": atomistic_violation,
    "dually_atomistic": dually_atomistic_violation,
    "geometric": geometric_violation,
    "distributive": distributive_violation,
    "strong": strong_violation,
    "dually_strong": _dually_strong_violation,
    "consistent": consistent_violation,
    "balanced": balanced_violation,
}


@dataclass
class PropertyReport:
    flags: dict[str, bool]
    witnesses: dict[str, tuple] = field(default_factory=dict)

    def __getattr__(self, name):
        flags = self.__dict__.get("flags", {})
        if name in flags:
            return flags[name]
        raise AttributeError(name)

    def to_json(self, L: FiniteLattice) -> dict:
        def enc(w):
            if isinstance(w, tuple):
                return [enc(v) for v in w]
            return L.labels[w] if isinstance(w, int) else w

        return {
            "schema": "declat/1",
            "size": L.size,
            "properties": dict(self.flags),
            "witnesses": {k: enc(v) if k != "korp" else _enc_korp(L, v) for k, v in self.witnesses.items()},
        }


def _enc_korp(L, w):
    a, d1, j, d2 = w
    lab = L.labels
    return {"element": lab[a], "decomposition": [lab[x] for x in d1], "irreplaceable": lab[j],
            "other": [lab[x] for x in d2]}


def property_report(L: FiniteLattice, caps: Caps = DEFAULT_CAPS) -> PropertyReport:
    flags, witnesses = {}, {}
    for name in PROPERTIES:
        w = korp_violation(L, caps) if name == "korp" else _CHECKERS[name](L)
        flags[name] = w is None
        if w is not None:
            witnesses[name] = w
    return PropertyReport(flags, witnesses)


def replacement_equivalences(L: FiniteLattice, caps: Caps = DEFAULT_CAPS) -> dict[str, bool]:
    sm = is_semimodular(L)
    return {
        "semimodular_and_korp": sm and has_join_korp(L, caps),
        "semimodular_and_balanced": sm and is_balanced(L),
        "semimodular_and_consistent": sm and is_consistent(L),
        "semimodular_and_strong": sm and is_strong_lattice(L),
    }


def verify_replacement_equivalences(L: FiniteLattice, caps: Caps = DEFAULT_CAPS) -> bool:
    """For semimodular L the replacement property, balance, consistency and
    strength coincide; all four conjuncts must agree."""
    return len(set(replacement_equivalences(L, caps).values())) == 1


def strong_join_identity_violation(L: FiniteLattice):
    """For j join-irreducible and j <= j_*∨x, check
    j = j∧(j_*∨x) = (j∧j_*)∨(j∧x) = j_*∨(j∧x) term by term; returns the first failing (j, x)."""
    for j in join_irreducibles_bruteforce(L):
        s = lower_star(L, j)
        for x in range(L.size):
            sx = L.join(s, x)
            if not L.leq[j, sx]:
                continue
            t1 = L.meet(j, sx)
            t2 = L.join(L.meet(j, s), L.meet(j, x))
            t3 = L.join(s, L.meet(j, x))
            if not (j == t1 == t2 == t3):
                return j, x
    return None


def verify_strong_join_identity(L: FiniteLattice) -> bool:
    return strong_join_identity_violation(L) is None


def strong_decompositions(F: SetFamily, D: DecompLattice) -> list[int]:
    return [i for i, p in enumerate(D.elements) if all(is_strong_set(F, b) for b in p.blocks)]


def verify_strong_decompositions_standard(F: SetFamily, D: DecompLattice | None = None,
                                          caps: Caps = DEFAULT_CAPS) -> bool:
    """Strong decompositions are standard elements and form a distributive sublattice."""
    D = D or build_lattice(F, caps)
    L = D.lattice
    S = strong_decompositions(F, D)
    if not all(is_standard_element(L, a) for a in S):
        return False
    Sset = set(S)
    for a in S:
        for b in S:
            if L.join(a, b) not in Sset or L.meet(a, b) not in Sset:
                return False
    pos = {a: k for k, a in enumerate(S)}
    sub = FiniteLattice([L.elements[a] for a in S], L.leq[np.ix_(S, S)],
                        np.vectorize(pos.__getitem__, otypes=[np.int64])(L.join_table[np.ix_(S, S)]),
                        np.vectorize(pos.__getitem__, otypes=[np.int64])(L.meet_table[np.ix_(S, S)]),
                        [L.labels[a] for a in S])
    return is_distributive(sub)


def atomistic_conditions(F: SetFamily, D: DecompLattice | None = None, caps: Caps = DEFAULT_CAPS) -> dict[str, bool]:
    rep = check_axioms(F)
    if not rep.is_interval_system:
        raise PreconditionError(f"not an interval system: {sorted(rep.witnesses)} fail")
    D = D or build_lattice(F, caps)
    L = D.lattice
    return {
        "atomistic": is_atomistic(L),
        "geometric": is_geometric(L),
        "dually_atomistic": is_dually_atomistic(L),
        "no_proper_strong_sets": not any(is_proper(F, s) for s in strong_sets(F).sets),
    }


def verify_atomistic_equivalence(F: SetFamily, D: DecompLattice | None = None, caps: Caps = DEFAULT_CAPS) -> bool:
    return len(set(atomistic_conditions(F, D, caps).values())) == 1


def dual(L: FiniteLattice) -> FiniteLattice:
    return L.dual()
