"""Runs every structural check over a corpus and collects one verdict per check."""

from __future__ import annotations

from dataclasses import dataclass, field

from .caps import DEFAULT_CAPS, Caps
from .decomp_lattice import build_lattice, verify_cover_structure, verify_generation
from .instances import Instance, to_family, verify_tree_boolean
from .irreducibles import (join_irreducibles_bruteforce, join_irreducibles_characterized,
                           verify_gpd_blocks_strong, verify_lower_star_strong)
from .lattice import FiniteLattice
from .lattice_props import (atomistic_conditions, balanced_violation, consistent_violation, is_dually_strong,
                            korp_violation, semimodular_violation, strong_violation,
                            verify_replacement_equivalences, verify_strong_decompositions_standard,
                            strong_join_identity_violation)
from .set_family import check_axioms
from .tolerance import glued_violation

CHECKS = {
    "axiom-contracts": "module, relation-interval and order-interval families are interval systems; "
                       "subtree families are closure systems with I0 and I1, with I2 exactly for paths",
    "decompositions-lattice": "decompositions form a lattice; a sublattice of Part(V) iff I1 holds",
    "generation": "every decomposition is the join of the pi_A of its blocks",
    "cover-structure": "a cover merges exactly one block out of at least two",
    "semimodular": "a∧b ≺ a implies b ≺ a∨b",
    "strong-decompositions-standard": "strong decompositions are standard and form a distributive sublattice",
    "join-irreducible-characterization": "join-irreducibles are the pi_A with A having a greatest proper decomposition",
    "gpd-blocks-strong": "greatest proper decomposition blocks are strong; A is strong when there are >= 3",
    "lower-star-strong": "j_* is a strong decomposition for every join-irreducible j",
    "atomistic-equivalence": "atomistic = geometric = dually atomistic = no proper strong sets",
    "balanced-korp": "strong, dually strong, consistent, balanced, with the join Kurosh-Ore replacement property",
    "strong-join-identity": "j <= j_*∨x gives j = j∧(j_*∨x) = (j∧j_*)∨(j∧x) = j_*∨(j∧x)",
    "replacement-equivalences": "semimodular+{korp, balanced, consistent, strong} agree",
    "glued-by-geometric": "every block of the skeleton tolerance is a geometric lattice",
    "tree-boolean": "subtree decompositions of a tree are the Boolean lattice of its edge sets",
}


@dataclass
class CheckResult:
    name: str
    description: str
    checked: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.name:<36} checked={self.checked:<4} {self.description}"
        if self.failures:
            inst, detail = self.failures[0]
            out += f" | witness {inst}: {detail}"
        elif self.checked == 1 and self.notes:
            out += f" | {self.notes[0]}"
        return out

    def to_json(self) -> dict:
        return {"check": self.name, "description": self.description, "passed": self.passed,
                "checked": self.checked, "failures": [{"instance": i, "detail": d} for i, d in self.failures]}


class Suite:
    def __init__(self):
        self.results = {name: CheckResult(name, desc) for name, desc in CHECKS.items()}

    def record(self, name: str, instance: str, ok: bool, detail="", note: str = "") -> None:
        r = self.results[name]
        r.checked += 1
        if not ok:
            r.failures.append((instance, str(detail)))
        elif note:
            r.notes.append(note)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def lines(self) -> list[str]:
        return [r.line() for r in self.results.values() if r.checked]

    def to_json(self) -> dict:
        return {"schema": "declat/1", "passed": self.passed,
                "checks": [r.to_json() for r in self.results.values() if r.checked]}


def _lattice_checks(suite: Suite, name: str, L: FiniteLattice, caps: Caps):
    def fmt(w):
        return "(" + ", ".join(L.labels[i] for i in w) + ")"

    w = semimodular_violation(L)
    suite.record("semimodular", name, w is None, w and fmt(w))
    bad = []
    for prop, fn in (("strong", strong_violation), ("consistent", consistent_violation),
                     ("balanced", balanced_violation)):
        v = fn(L)
        if v is not None:
            bad.append(f"{prop} {fmt(v)}")
    if not is_dually_strong(L):
        bad.append("dually strong")
    if korp_violation(L, caps) is not None:
        bad.append("korp")
    suite.record("balanced-korp", name, not bad, "; ".join(bad))
    w = strong_join_identity_violation(L)
    suite.record("strong-join-identity", name, w is None, w and f"j, x = {fmt(w)}")
    b = glued_violation(L, caps)
    suite.record("glued-by-geometric", name, b is None, b and f"block [{L.labels[b.lo]}, {L.labels[b.hi]}]")


def check_instance(suite: Suite, inst: Instance, caps: Caps = DEFAULT_CAPS) -> None:
    name = inst.name or inst.kind
    F = to_family(inst, caps)
    rep = check_axioms(F)

    if inst.kind in ("graph", "relation", "linear_order"):
        suite.record("axiom-contracts", name, rep.is_interval_system, rep.witnesses)
    elif inst.kind == "tree":
        degrees = [sum(v in e for e in inst.edges) for v in range(inst.n)]
        expect_i2 = max(degrees, default=0) <= 2
        ok = rep.is_closure_system and rep.holds_I0 and rep.holds_I1 and rep.holds_I2 == expect_i2
        suite.record("axiom-contracts", name, ok, rep.witnesses)
    if not rep.is_closure_system:
        return

    D = build_lattice(F, caps)
    L = D.lattice
    suite.record("decompositions-lattice", name, D.is_sublattice_of_part_v == rep.holds_I1,
                 f"sublattice flag {D.is_sublattice_of_part_v}, I1 {rep.holds_I1}")
    suite.record("cover-structure", name, verify_cover_structure(D))
    suite.record("replacement-equivalences", name, verify_replacement_equivalences(L, caps))
    if inst.kind == "tree":
        sizes = f"|D|={len(D)}, 2^|E|={2 ** len(inst.edges)}"
        suite.record("tree-boolean", name, verify_tree_boolean(inst, caps), sizes, note=sizes)
    if rep.holds_I0:
        suite.record("generation", name, verify_generation(D))
        chars = {D.index(c.element) for c in join_irreducibles_characterized(F, caps)}
        brute = set(join_irreducibles_bruteforce(L))
        suite.record("join-irreducible-characterization", name, chars == brute,
                     f"characterized-only {sorted(L.labels[i] for i in chars - brute)}, "
                     f"bruteforce-only {sorted(L.labels[i] for i in brute - chars)}")
        suite.record("strong-decompositions-standard", name, verify_strong_decompositions_standard(F, D, caps))
    if rep.holds_I1 and not rep.is_interval_system:
        w = semimodular_violation(L)
        suite.record("semimodular", name, w is None, w)
    if rep.is_interval_system:
        suite.record("gpd-blocks-strong", name, verify_gpd_blocks_strong(F, caps))
        suite.record("lower-star-strong", name, verify_lower_star_strong(F, D, caps))
        conds = atomistic_conditions(F, D, caps)
        suite.record("atomistic-equivalence", name, len(set(conds.values())) == 1, conds)
        _lattice_checks(suite, name, L, caps)


def check_lattice(suite: Suite, name: str, L: FiniteLattice, caps: Caps = DEFAULT_CAPS) -> None:
    """Lattice-level claims applied to an explicit lattice (negative controls)."""
    suite.record("replacement-equivalences", name, verify_replacement_equivalences(L, caps))
    _lattice_checks(suite, name, L, caps)


def run_suite(instances, caps: Caps = DEFAULT_CAPS) -> Suite:
    suite = Suite()
    for inst in instances:
        check_instance(suite, inst, caps)
    return suite
