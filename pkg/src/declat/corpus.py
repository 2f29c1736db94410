"""Built-in instances used by the verification suite."""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from .instances import Instance, linear_order_relation, star

CORPORA = ("small-graphs", "linear-orders", "trees", "families", "all")

NESTED = Instance.family(3, [[], [0], [1], [2], [0, 1], [0, 1, 2]], name="nested")
CHAIN3 = Instance.family(3, [[], [0], [1], [2], [0, 1], [1, 2], [0, 1, 2]], name="chain3")
I1_FAILING = Instance.family(4, [[], [0], [1], [2], [3], [0, 1], [1, 2], [2, 3], [0, 1, 2, 3]], name="i1-failing")


def powerset_family(n: int) -> Instance:
    sets = [[i for i in range(n) if m >> i & 1] for m in range(1 << n)]
    return Instance.family(n, sets, name=f"powerset{n}")


def labeled_graphs(n: int) -> list[Instance]:
    possible = list(combinations(range(n), 2))
    out = []
    for m in range(1 << len(possible)):
        edges = [e for k, e in enumerate(possible) if m >> k & 1]
        out.append(Instance.graph(n, edges, name=f"g{n}-{m}"))
    return out


def random_graphs(count: int, seed: int, sizes=(5, 6), p: float = 0.5) -> list[Instance]:
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.choice(sizes)
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        out.append(Instance.graph(n, edges, name=f"rand{n}-{k}"))
    return out


def random_relations(count: int, seed: int, sizes=(3, 4), p: float = 0.4) -> list[Instance]:
    rng = random.Random(seed + 1)
    out = []
    for k in range(count):
        n = rng.choice(sizes)
        pairs = [(a, b) for a in range(n) for b in range(n) if a != b and rng.random() < p]
        out.append(Instance.relation(n, pairs, name=f"rel{n}-{k}"))
    return out


def small_trees(max_edges: int = 6) -> list[Instance]:
    out = [Instance.tree(1, [], name="tree1-0")]
    for order in range(2, max_edges + 2):
        for k, t in enumerate(nx.nonisomorphic_trees(order)):
            out.append(Instance.tree(order, sorted(tuple(sorted(e)) for e in t.edges), name=f"tree{order}-{k}"))
    return out


def build_corpus(name: str = "all", seed: int = 7, random_count: int = 50) -> list[Instance]:
    if name not in CORPORA:
        raise ValueError(f"unknown corpus {name!r}")
    out: list[Instance] = []
    if name in ("small-graphs", "all"):
        for n in range(1, 5):
            out += labeled_graphs(n)
        out += random_graphs(random_count, seed)
    if name in ("linear-orders", "all"):
        out += [Instance.linear_order(n, name=f"linear-order{n}") for n in range(1, 6)]
        out += [linear_order_relation(n) for n in range(1, 5)]
        out += random_relations(20, seed)
    if name in ("trees", "all"):
        out += small_trees()
        out.append(star(3))
    if name in ("families", "all"):
        out += [NESTED, CHAIN3, I1_FAILING] + [powerset_family(n) for n in range(1, 4)]
    return out
