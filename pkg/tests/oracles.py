"""Brute-force reference implementations, kept independent of the package code paths."""

from itertools import combinations

import networkx as nx


def set_partitions(items):
    """All set partitions of ``items`` as lists of frozensets (restricted growth strings)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        yield [frozenset([first])] + smaller
        for k in range(len(smaller)):
            yield smaller[:k] + [smaller[k] | {first}] + smaller[k + 1:]


def decompositions(n, family):
    fam = {frozenset(s) for s in family}
    return [frozenset(p) for p in set_partitions(range(n)) if all(b in fam for b in p)]


def refines(p, q):
    return all(any(b <= c for c in q) for b in p)


def lub(elems, a, b):
    ups = [c for c in elems if refines(a, c) and refines(b, c)]
    least = [c for c in ups if all(refines(c, d) for d in ups)]
    assert len(least) == 1
    return least[0]


def graph_modules(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    out = []
    for k in range(n + 1):
        for X in combinations(range(n), k):
            X = set(X)
            if all(len(set(g[v]) & X) in (0, len(X)) for v in set(range(n)) - X):
                out.append(frozenset(X))
    return out


def connected_sets(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    out = [frozenset()]
    for k in range(1, n + 1):
        for X in combinations(range(n), k):
            if nx.is_connected(g.subgraph(X)):
                out.append(frozenset(X))
    return out


def strong_members(family):
    fam = [frozenset(s) for s in family]
    return {a for a in fam if all(not (a & b) or a <= b or b <= a for b in fam)}


def is_semimodular(L):
    n = L.size
    cov = set(L.covers)
    for a in range(n):
        for b in range(n):
            if (L.meet(a, b), a) in cov and (b, L.join(a, b)) not in cov:
                return False
    return True
