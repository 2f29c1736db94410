import pytest
from hypothesis import given

from declat.corpus import build_corpus
from declat.decomp_lattice import build_lattice
from declat.errors import PreconditionError
from declat.instances import Instance, graph_modules, to_family
from declat.lattice import boolean_lattice, chain, m3, n5
from declat.lattice_props import (atomistic_conditions, distributive_violation, dual, has_join_korp,
                                  irredundant_decompositions, is_atomistic, is_balanced, is_consistent,
                                  is_distributive, is_dually_atomistic, is_dually_strong, is_geometric,
                                  is_semimodular, is_standard_element, is_strong_lattice, property_report,
                                  replacement_equivalences, semimodular_violation, standard_elements,
                                  standard_identity_holds, standard_violation, strong_decompositions,
                                  verify_atomistic_equivalence, verify_replacement_equivalences,
                                  verify_strong_decompositions_standard, verify_strong_join_identity)
from declat.set_family import check_axioms

import oracles
from strategies import closure_lattices


def idx(L, label):
    return L.labels.index(label)


def test_semimodular_examples(b2):
    assert is_semimodular(b2)
    N = n5()
    assert not is_semimodular(N)
    a, b = semimodular_violation(N)
    assert (N.labels[a], N.labels[b]) == ("b", "a")
    assert N.covered_by(N.meet(a, b), a) and not N.covered_by(b, N.join(a, b))


def test_atomistic_examples(b2, chain_of_3, part3):
    assert is_atomistic(b2) and is_geometric(b2)
    assert not is_atomistic(chain_of_3)
    assert is_geometric(part3)


def test_standard_examples(part3, chain_of_3):
    for L in (part3, chain_of_3, n5(), m3()):
        assert is_standard_element(L, L.bottom) and is_standard_element(L, L.top)
    a, x, y = idx(part3, "01|2"), idx(part3, "02|1"), idx(part3, "0|12")
    assert not standard_identity_holds(part3, a, x, y)
    assert part3.meet(x, part3.join(a, y)) == x
    assert part3.join(part3.meet(x, a), part3.meet(x, y)) == part3.bottom
    assert standard_violation(part3, a) in {(x, y), (y, x)}
    assert standard_elements(chain_of_3) == [0, 1, 2]


def test_strong_decompositions_examples(nested, powerset3):
    D = build_lattice(nested)
    assert len(strong_decompositions(nested, D)) == 3
    assert verify_strong_decompositions_standard(nested, D)
    D = build_lattice(powerset3)
    assert [D.lattice.labels[i] for i in strong_decompositions(powerset3, D)] == ["0|1|2", "012"]
    assert verify_strong_decompositions_standard(powerset3, D)


def test_strong_lattice_examples(b2, chain_of_3):
    assert is_strong_lattice(b2) and is_strong_lattice(chain_of_3)


def test_consistent_examples(b2, chain_of_3):
    assert is_consistent(b2) and is_consistent(chain_of_3)


def test_balanced_examples(b2, chain_of_3):
    assert is_balanced(chain_of_3) and is_balanced(b2)


def test_korp_examples(b2, part3):
    assert irredundant_decompositions(b2)[b2.top] == [(1, 2)]
    assert has_join_korp(b2)
    assert len(irredundant_decompositions(part3)[part3.top]) == 3
    assert has_join_korp(part3)


def test_replacement_equivalence_examples(part3):
    N = n5()
    assert verify_replacement_equivalences(N)
    assert not any(replacement_equivalences(N).values())
    assert verify_replacement_equivalences(part3)
    assert all(replacement_equivalences(part3).values())


def test_atomistic_equivalence_examples(chain3, nested):
    assert set(atomistic_conditions(chain3).values()) == {True}
    assert set(atomistic_conditions(nested).values()) == {False}
    k3 = graph_modules(Instance.graph(3, [(0, 1), (0, 2), (1, 2)]))
    assert verify_atomistic_equivalence(k3)
    assert set(atomistic_conditions(k3).values()) == {True}
    with pytest.raises(PreconditionError):
        atomistic_conditions(to_family(Instance.tree(4, [(0, 1), (0, 2), (0, 3)])))


def test_dual_examples(b2, chain_of_3):
    for L in (b2, chain_of_3, n5()):
        assert dual(dual(L)) == L
    assert dual(chain_of_3).is_isomorphic(chain_of_3)
    assert dual(b2).is_isomorphic(b2)
    N = dual(n5())
    assert N.bottom == n5().top and not is_semimodular(N)


def test_distributive():
    assert is_distributive(boolean_lattice(3)) and is_distributive(chain(4))
    assert distributive_violation(m3()) is not None and not is_distributive(n5())


def test_property_report_witnesses():
    rep = property_report(n5())
    assert not rep.semimodular and "semimodular" in rep.witnesses
    assert set(rep.witnesses) == {k for k, v in rep.flags.items() if not v}
    assert rep.flags["geometric"] == (rep.flags["atomistic"] and rep.flags["semimodular"])
    doc = rep.to_json(n5())
    assert doc["witnesses"]["semimodular"] == ["b", "a"]


def test_one_element_lattice():
    L = chain(1)
    assert all(property_report(L).flags.values())


@given(closure_lattices())
def test_semimodular_matches_oracle(L):
    assert is_semimodular(L) == oracles.is_semimodular(L)


@given(closure_lattices())
def test_korp_iff_consistent(L):
    assert has_join_korp(L) == is_consistent(L)


@given(closure_lattices())
def test_balanced_iff_strong_both_ways(L):
    assert is_balanced(L) == (is_strong_lattice(L) and is_dually_strong(L))


@given(closure_lattices())
def test_semimodular_lattices_are_dually_strong(L):
    if is_semimodular(L):
        assert is_dually_strong(L)
    assert verify_replacement_equivalences(L)


@given(closure_lattices())
def test_distributive_implications(L):
    if is_distributive(L):
        assert is_balanced(L) and is_consistent(L)
        assert standard_elements(L) == list(range(L.size))
    if is_geometric(L):
        assert is_dually_atomistic(L)


@pytest.mark.parametrize("inst", build_corpus("all")[::2], ids=lambda i: i.name)
def test_interval_lattices_on_corpus(inst):
    fam = to_family(inst)
    rep = check_axioms(fam)
    if not rep.is_closure_system:
        pytest.skip("not a closure system")
    D = build_lattice(fam)
    L = D.lattice
    if rep.holds_I0:
        assert verify_strong_decompositions_standard(fam, D)
    if rep.is_interval_system:
        assert is_semimodular(L) and is_strong_lattice(L) and is_consistent(L)
        assert is_balanced(L) and has_join_korp(L)
        assert verify_strong_join_identity(L)
        assert verify_atomistic_equivalence(fam, D)
