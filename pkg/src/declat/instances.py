"""Set families derived from concrete structures: graphs, relations, linear orders, trees."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import jsonschema

from .bits import elements, full, lowest, mask_of
from .caps import DEFAULT_CAPS, Caps
from .decomp_lattice import build_lattice
from .errors import DomainError, ParseError, ResourceError
from .lattice import FiniteLattice, transitive_closure
from .partitions import Partition, join_partition, pi_A, refines
from .set_family import SetFamily

KINDS = ("graph", "tree", "relation", "linear_order", "family")


@dataclass(frozen=True)
class Instance:
    kind: str
    n: int
    edges: tuple[tuple[int, int], ...] = ()
    pairs: tuple[tuple[int, int], ...] = ()
    sets: tuple[tuple[int, ...], ...] = ()
    name: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown instance kind {self.kind!r}")
        if self.n < 0:
            raise DomainError("n must be nonnegative")
        if self.kind in ("graph", "tree"):
            seen = set()
            for u, v in self.edges:
                if not (0 <= u < self.n and 0 <= v < self.n):
                    raise DomainError(f"edge ({u}, {v}) leaves the vertex range")
                if u == v:
                    raise DomainError(f"loop at vertex {u}")
                e = frozenset((u, v))
                if e in seen:
                    raise DomainError(f"duplicate edge ({u}, {v})")
                seen.add(e)
        if self.kind == "tree":
            _check_tree(self.n, self.edges)
        if self.kind == "relation":
            for a, b in self.pairs:
                if not (0 <= a < self.n and 0 <= b < self.n):
                    raise DomainError(f"pair ({a}, {b}) leaves the element range")

    @classmethod
    def graph(cls, n, edges, name=""):
        return cls("graph", n, edges=tuple(tuple(e) for e in edges), name=name)

    @classmethod
    def tree(cls, n, edges, name=""):
        return cls("tree", n, edges=tuple(tuple(e) for e in edges), name=name)

    @classmethod
    def relation(cls, n, pairs, name=""):
        return cls("relation", n, pairs=tuple(tuple(p) for p in pairs), name=name)

    @classmethod
    def linear_order(cls, n, name=""):
        return cls("linear_order", n, name=name)

    @classmethod
    def family(cls, n, sets, name=""):
        return cls("family", n, sets=tuple(tuple(s) for s in sets), name=name)

    def to_json(self) -> dict:
        doc = {"type": self.kind, "n": self.n}
        if self.kind in ("graph", "tree"):
            doc["edges"] = [list(e) for e in self.edges]
        elif self.kind == "relation":
            doc["pairs"] = [list(p) for p in self.pairs]
        elif self.kind == "family":
            doc["sets"] = [list(s) for s in self.sets]
        return doc


def _check_tree(n: int, edges):
    if n < 1:
        raise DomainError("a tree needs at least one vertex")
    if len(edges) != n - 1:
        raise DomainError(f"a tree on {n} vertices has {n - 1} edges, got {len(edges)}")
    adj = _adjacency(n, edges)
    if _component(adj, 0, full(n)) != full(n):
        raise DomainError("tree edges do not connect all vertices")


def _adjacency(n: int, edges) -> list[int]:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _component(adj: list[int], start: int, within: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in elements(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def linear_order_intervals(n: int) -> SetFamily:
    if n < 1:
        raise DomainError("a linear order needs at least one element")
    ivs = [0] + [full(j + 1) & ~full(i) for i in range(n) for j in range(i, n)]
    return SetFamily(n, tuple(ivs))


def _check_cap(n: int, cap: int, name: str):
    if n > cap:
        raise ResourceError(name, cap, f"{n} elements exceed cap {name}={cap}")


def graph_modules(g: Instance, caps: Caps = DEFAULT_CAPS) -> SetFamily:
    """Vertex sets X such that each outside vertex sees all of X or none of it."""
    _check_cap(g.n, caps.max_graph_n, "max_graph_n")
    adj = _adjacency(g.n, g.edges)
    return SetFamily(g.n, tuple(X for X in range(1 << g.n) if _uniform(X, full(g.n), adj, adj)))


def _uniform(X: int, ground: int, out: list[int], inn: list[int]) -> bool:
    for v in elements(ground & ~X):
        o = out[v] & X
        if o and o != X:
            return False
        i = inn[v] & X
        if i and i != X:
            return False
    return True


def relation_intervals(r: Instance, caps: Caps = DEFAULT_CAPS) -> SetFamily:
    """Sets X such that no outside element distinguishes two members of X,
    in either direction of the relation."""
    _check_cap(r.n, caps.max_graph_n, "max_graph_n")
    out = [0] * r.n
    inn = [0] * r.n
    for a, b in r.pairs:
        out[a] |= 1 << b
        inn[b] |= 1 << a
    return SetFamily(r.n, tuple(X for X in range(1 << r.n) if _uniform(X, full(r.n), out, inn)))


def symmetrize(g: Instance) -> Instance:
    pairs = sorted({(u, v) for u, v in g.edges} | {(v, u) for u, v in g.edges})
    return Instance.relation(g.n, pairs, name=g.name)


def tree_subtrees(t: Instance, caps: Caps = DEFAULT_CAPS) -> SetFamily:
    """Empty set plus the vertex sets of connected subgraphs."""
    if t.kind != "tree":
        raise DomainError("tree_subtrees needs a tree instance")
    _check_cap(t.n, caps.max_tree_n, "max_tree_n")
    adj = _adjacency(t.n, t.edges)
    sets = [0] + [X for X in range(1, 1 << t.n) if _component(adj, lowest(X), X) == X]
    return SetFamily(t.n, tuple(sets))


def edge_partition(t: Instance, S: int) -> Partition:
    """Components of (V, S) for an edge subset S given as a mask over ``t.edges``."""
    p = Partition.bottom(t.n)
    for k in elements(S):
        p = join_partition(p, pi_A(t.n, t.edges[k]))
    return p


def verify_tree_boolean(t: Instance, caps: Caps = DEFAULT_CAPS) -> bool:
    """S -> components of (V, S) is an order isomorphism from the edge
    subsets onto the subtree decompositions."""
    D = build_lattice(tree_subtrees(t, caps), caps)
    m = len(t.edges)
    images = [edge_partition(t, S) for S in range(1 << m)]
    if len(set(images)) != len(images) or set(images) != set(D.elements):
        return False
    for S1 in range(1 << m):
        for S2 in range(1 << m):
            if (S1 & ~S2 == 0) != refines(images[S1], images[S2]):
                return False
    return len(D) == 1 << m


def to_family(inst: Instance, caps: Caps = DEFAULT_CAPS) -> SetFamily:
    _check_cap(inst.n, caps.max_n, "max_n")
    if inst.kind == "graph":
        return graph_modules(inst, caps)
    if inst.kind == "relation":
        return relation_intervals(inst, caps)
    if inst.kind == "tree":
        return tree_subtrees(inst, caps)
    if inst.kind == "linear_order":
        return linear_order_intervals(inst.n)
    return SetFamily.of(inst.n, inst.sets, caps)


_INT = {"type": "integer", "minimum": 0}
_PAIR = {"type": "array", "items": _INT, "minItems": 2, "maxItems": 2}
SCHEMAS = {
    "graph": {"required": ["n", "edges"], "properties": {"edges": {"type": "array", "items": _PAIR}}},
    "tree": {"required": ["n", "edges"], "properties": {"edges": {"type": "array", "items": _PAIR}}},
    "relation": {"required": ["n", "pairs"], "properties": {"pairs": {"type": "array", "items": _PAIR}}},
    "linear_order": {"required": ["n"], "properties": {}},
    "family": {"required": ["n", "sets"],
               "properties": {"sets": {"type": "array", "items": {"type": "array", "items": _INT}}}},
    "lattice": {"required": ["elements", "leq"],
                "properties": {"elements": {"type": "array", "items": {"type": "string"}, "minItems": 1},
                               "leq": {"type": "array", "items": _PAIR}}},
}


def _location(path) -> str:
    loc = "$"
    for p in path:
        loc += f"[{p}]" if isinstance(p, int) else f".{p}"
    return loc


def _validate(doc, kind: str):
    schema = {"type": "object", **SCHEMAS[kind]}
    schema["properties"] = {"type": {"const": kind}, "n": _INT, **schema["properties"]}
    schema["properties"]["name"] = {"type": "string"}
    schema["additionalProperties"] = False
    err = jsonschema.exceptions.best_match(jsonschema.Draft202012Validator(schema).iter_errors(doc))
    if err is not None:
        raise ParseError(err.message, _location(err.absolute_path))


def _check_indices(doc, key: str, n: int):
    for i, item in enumerate(doc.get(key, [])):
        for k, v in enumerate(item):
            if v >= n:
                raise ParseError(f"index {v} out of range for n={n}", f"$.{key}[{i}][{k}]")


def load_instance(doc) -> Instance:
    if not isinstance(doc, dict):
        raise ParseError("instance document must be an object")
    kind = doc.get("type")
    if kind not in KINDS:
        raise ParseError(f"unknown type {kind!r}", "$.type")
    _validate(doc, kind)
    n = doc["n"]
    key = {"graph": "edges", "tree": "edges", "relation": "pairs", "family": "sets"}.get(kind)
    if key:
        _check_indices(doc, key, n)
    try:
        if kind == "graph":
            return Instance.graph(n, doc["edges"], doc.get("name", ""))
        if kind == "tree":
            return Instance.tree(n, doc["edges"], doc.get("name", ""))
        if kind == "relation":
            return Instance.relation(n, doc["pairs"], doc.get("name", ""))
        if kind == "linear_order":
            return Instance.linear_order(n, doc.get("name", ""))
        return Instance.family(n, doc["sets"], doc.get("name", ""))
    except DomainError as e:
        raise ParseError(str(e), "$") from e


def load_lattice(doc) -> FiniteLattice:
    """Explicit lattice: element labels plus generating pairs i <= j."""
    _validate(doc, "lattice")
    names = doc["elements"]
    _check_indices(doc, "leq", len(names))
    return FiniteLattice.from_leq(names, transitive_closure(len(names), map(tuple, doc["leq"])), names)


def star(k: int) -> Instance:
    """Star with center 0 and leaves 1..k."""
    return Instance.tree(k + 1, [(0, i) for i in range(1, k + 1)], name=f"star{k}")


def path_tree(n: int) -> Instance:
    return Instance.tree(n, [(i, i + 1) for i in range(n - 1)], name=f"path{n}")


def linear_order_relation(n: int) -> Instance:
    return Instance.relation(n, list(combinations(range(n), 2)), name=f"linear{n}")
