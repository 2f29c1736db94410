import numpy as np
import pytest
from hypothesis import given, strategies as st

from declat.corpus import build_corpus
from declat.decomp_lattice import build_lattice
from declat.instances import to_family
from declat.lattice import chain, n5
from declat.lattice_props import is_semimodular, is_strong_lattice
from declat.set_family import check_axioms
from declat.tolerance import (ToleranceRel, blocks, factor_lattice, is_glued_by_geometric, is_glued_tolerance,
                              skeleton_tolerance, tolerance_closure, tolerance_closure_naive)

from strategies import closure_lattices


def block_labels(L, T):
    return [(L.labels[b.lo], L.labels[b.hi]) for b in blocks(T)]


def test_closure_examples(b2, chain_of_3):
    assert tolerance_closure(b2, b2.covers).rel.all()
    assert np.array_equal(tolerance_closure(b2).rel, np.eye(4, dtype=bool))
    T = tolerance_closure(chain_of_3, chain_of_3.covers)
    assert (chain_of_3.bottom, chain_of_3.top) not in T
    assert (0, 1) in T and (1, 2) in T


def test_skeleton_examples(b2, chain_of_3):
    assert skeleton_tolerance(b2).rel.all()
    assert block_labels(chain_of_3, skeleton_tolerance(chain_of_3)) == [("0|1|2", "01|2"), ("01|2", "012")]
    one = chain(1)
    assert skeleton_tolerance(one).rel.tolist() == [[True]]


def test_blocks_examples(b2):
    assert block_labels(b2, skeleton_tolerance(b2)) == [("0|1|2", "012")]
    diag = tolerance_closure(b2)
    assert [(b.lo, b.hi) for b in blocks(diag)] == [(a, a) for a in range(4)]


def test_factor_examples(b2, chain_of_3):
    assert factor_lattice(skeleton_tolerance(chain_of_3)).is_isomorphic(chain(2))
    assert factor_lattice(skeleton_tolerance(b2)).size == 1
    for L in (b2, chain_of_3, n5()):
        assert factor_lattice(tolerance_closure(L)).is_isomorphic(L)


def test_glued_examples(b2, chain_of_3):
    assert is_glued_tolerance(skeleton_tolerance(b2))
    assert not is_glued_tolerance(tolerance_closure(b2))
    assert is_glued_tolerance(ToleranceRel(b2, np.ones((4, 4), dtype=bool)))
    assert is_glued_by_geometric(chain_of_3) and is_glued_by_geometric(b2)
    assert not is_glued_by_geometric(n5())


def seeds_for(L, data):
    pairs = st.tuples(st.integers(0, L.size - 1), st.integers(0, L.size - 1))
    return data.draw(st.lists(pairs, max_size=4))


@given(closure_lattices(), st.data())
def test_fast_closure_matches_naive(L, data):
    seed = seeds_for(L, data)
    T = tolerance_closure(L, seed)
    assert T == tolerance_closure_naive(L, seed)
    assert T.is_tolerance()


@given(closure_lattices(), st.data())
def test_closure_operator_laws(L, data):
    s1 = seeds_for(L, data)
    s2 = s1 + seeds_for(L, data)
    T1, T2 = tolerance_closure(L, s1), tolerance_closure(L, s2)
    assert all((a, b) in T1 for a, b in s1)
    assert (T1.rel <= T2.rel).all()
    assert tolerance_closure(L, T1.pairs()) == T1


@given(closure_lattices(), st.data())
def test_skeleton_is_least_glued(L, data):
    sk = skeleton_tolerance(L)
    assert is_glued_tolerance(sk)
    other = tolerance_closure(L, L.covers + seeds_for(L, data))
    assert (sk.rel <= other.rel).all()


@given(closure_lattices(), st.data())
def test_blocks_are_intervals(L, data):
    T = tolerance_closure(L, seeds_for(L, data))
    for b in blocks(T):
        assert set(b.members) == set(np.flatnonzero(L.leq[b.lo] & L.leq[:, b.hi]).tolist())
    factor_lattice(T)


@given(closure_lattices())
def test_glued_by_geometric_iff_semimodular_and_strong(L):
    assert is_glued_by_geometric(L) == (is_semimodular(L) and is_strong_lattice(L))


INTERVAL_CORPUS = [i for i in build_corpus("all")[::2] if check_axioms(to_family(i)).is_interval_system]


@pytest.mark.parametrize("inst", INTERVAL_CORPUS, ids=lambda i: i.name)
def test_corpus_lattices_glued(inst):
    L = build_lattice(to_family(inst)).lattice
    assert is_glued_by_geometric(L)
    assert skeleton_tolerance(L) == tolerance_closure_naive(L, L.covers)
