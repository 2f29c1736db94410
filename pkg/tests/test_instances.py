import pytest
from hypothesis import given, strategies as st

from declat.caps import Caps
from declat.corpus import labeled_graphs, small_trees
from declat.decomp_lattice import build_lattice
from declat.errors import DomainError, ParseError, ResourceError
from declat.instances import (Instance, graph_modules, linear_order_intervals, linear_order_relation,
                              load_instance, path_tree, relation_intervals, star, symmetrize, to_family,
                              tree_subtrees, verify_tree_boolean)
from declat.set_family import SetFamily, check_axioms, validate_closure_system

import oracles

P4 = Instance.graph(4, [(0, 1), (1, 2), (2, 3)])
K3 = Instance.graph(3, [(0, 1), (0, 2), (1, 2)])


def test_linear_order_counts():
    assert len(linear_order_intervals(3)) == 7
    assert linear_order_intervals(1).as_lists() == [[], [0]]
    assert len(linear_order_intervals(4)) == 11
    for n in range(1, 7):
        assert len(linear_order_intervals(n)) == 1 + n * (n + 1) // 2
    with pytest.raises(DomainError):
        linear_order_intervals(0)


def test_graph_module_examples():
    assert graph_modules(K3) == SetFamily.powerset(3)
    assert graph_modules(P4).as_lists() == [[], [0], [1], [2], [3], [0, 1, 2, 3]]
    assert graph_modules(Instance.graph(3, [])) == SetFamily.powerset(3)


@pytest.mark.parametrize("g", labeled_graphs(4)[::3], ids=lambda g: g.name)
def test_graph_modules_match_oracle(g):
    got = {frozenset(s) for s in graph_modules(g).as_lists()}
    assert got == set(oracles.graph_modules(g.n, g.edges))
    assert check_axioms(graph_modules(g)).is_interval_system


def test_relation_examples():
    assert relation_intervals(linear_order_relation(3)) == linear_order_intervals(3)
    full = Instance.relation(3, [(a, b) for a in range(3) for b in range(3)])
    assert relation_intervals(full) == SetFamily.powerset(3)
    assert relation_intervals(symmetrize(P4)) == graph_modules(P4)


def test_subtree_examples():
    assert tree_subtrees(path_tree(3)) == linear_order_intervals(3)
    assert len(tree_subtrees(star(3))) == 12
    assert tree_subtrees(Instance.tree(1, [])).as_lists() == [[], [0]]


@pytest.mark.parametrize("t", small_trees(), ids=lambda t: t.name)
def test_subtrees_match_oracle(t):
    got = {frozenset(s) for s in tree_subtrees(t).as_lists()}
    assert got == set(oracles.connected_sets(t.n, t.edges))
    rep = check_axioms(tree_subtrees(t))
    assert rep.is_closure_system and rep.holds_I0 and rep.holds_I1
    assert verify_tree_boolean(t)
    assert len(build_lattice(tree_subtrees(t))) == 2 ** len(t.edges)


def test_tree_boolean_examples():
    assert verify_tree_boolean(path_tree(3)) and len(build_lattice(tree_subtrees(path_tree(3)))) == 4
    assert verify_tree_boolean(star(3)) and len(build_lattice(tree_subtrees(star(3)))) == 8
    assert verify_tree_boolean(path_tree(2)) and len(build_lattice(tree_subtrees(path_tree(2)))) == 2


def test_invalid_instances():
    with pytest.raises(DomainError):
        Instance.tree(3, [(0, 1)])
    with pytest.raises(DomainError):
        Instance.tree(4, [(0, 1), (1, 0), (2, 3)])
    with pytest.raises(DomainError):
        Instance.graph(2, [(0, 0)])
    with pytest.raises(DomainError):
        Instance.graph(2, [(0, 1), (1, 0)])
    with pytest.raises(DomainError):
        tree_subtrees(K3)


def test_caps():
    with pytest.raises(ResourceError):
        graph_modules(Instance.graph(6, []), Caps(max_graph_n=5))
    with pytest.raises(ResourceError):
        tree_subtrees(path_tree(5), Caps(max_tree_n=4))


def test_load_examples():
    assert len(to_family(load_instance({"type": "linear_order", "n": 3}))) == 7
    g = load_instance({"type": "graph", "n": 3, "edges": [[0, 1], [0, 2], [1, 2]]})
    assert to_family(g) == SetFamily.powerset(3)
    f = to_family(load_instance({"type": "family", "n": 2, "sets": [[], [0], [1], [0, 1]]}))
    assert f.as_lists() == [[], [0], [1], [0, 1]]


@pytest.mark.parametrize("doc, location", [
    ({"type": "graph", "n": 3, "edges": [[0, 1], [0, 7]]}, "$.edges[1][1]"),
    ({"type": "graph", "n": 3, "edges": [[0, 1], [0]]}, "$.edges[1]"),
    ({"type": "graph", "n": 3}, "$"),
    ({"type": "family", "n": 2, "sets": [[0, "x"]]}, "$.sets[0][1]"),
    ({"type": "relation", "n": -1, "pairs": []}, "$.n"),
    ({"type": "hypergraph", "n": 2}, "$.type"),
    ({"type": "tree", "n": 3, "edges": [[0, 1]]}, "$"),
    ({"type": "linear_order", "n": 2, "extra": 1}, "$"),
])
def test_load_errors(doc, location):
    with pytest.raises(ParseError) as err:
        load_instance(doc)
    assert err.value.location == location


def test_round_trip():
    for inst in (P4, star(3), linear_order_relation(3), Instance.linear_order(4),
                 Instance.family(2, [[], [0], [0, 1]])):
        assert to_family(load_instance(inst.to_json())) == to_family(inst)


graphs = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1]),
                       unique=True).map(lambda es: Instance.graph(n, es)))
relations = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), unique=True)
    .map(lambda ps: Instance.relation(n, ps)))


@given(graphs)
def test_modules_equal_symmetric_relation_intervals(g):
    assert graph_modules(g) == relation_intervals(symmetrize(g))


@given(relations)
def test_relation_intervals_are_interval_systems(r):
    fam = relation_intervals(r)
    assert validate_closure_system(fam).is_closure_system
    assert check_axioms(fam).is_interval_system


@given(st.integers(1, 7))
def test_linear_orders_three_ways(n):
    assert linear_order_intervals(n) == tree_subtrees(path_tree(n)) == relation_intervals(linear_order_relation(n))
