"""Power, enhanced power, commuting, prime and difference graphs of a group.

Vertices are element ids (primes for the prime graph) kept in increasing
order, so vertex index order and label order agree and emitted edge lists are
stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from .errors import NotSubgraph, TrivialGroup, VertexMismatch
from .groups import FiniteGroup
from .numtheory import prime_divisors

KINDS = ("power", "enhanced", "commuting")
POLICIES = ("include", "exclude")


@dataclass(frozen=True, eq=False)
class Graph:
    """Loop-free undirected graph with a symmetric boolean adjacency matrix."""

    labels: tuple[int, ...]
    adj: np.ndarray
    kind: str
    identity_policy: str = "include"
    group_label: str = ""
    detail: str = ""

    def __post_init__(self):
        n = len(self.labels)
        if self.adj.shape != (n, n):
            raise ValueError(f"adjacency shape {self.adj.shape} does not match {n} vertices")
        if self.adj.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if not np.array_equal(self.adj, self.adj.T):
            raise ValueError("adjacency must be symmetric")

    def __repr__(self) -> str:
        return f"Graph({self.kind}, {self.group_label}, n={self.vertex_count}, m={self.edge_count})"

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    @cached_property
    def index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.labels)}

    @cached_property
    def masks(self) -> list[int]:
        """Neighbourhood of each vertex index as an int bitset."""
        return _row_masks(self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[self.index[u], self.index[v]])

    def neighbors(self, u: int) -> list[int]:
        return [self.labels[j] for j in np.flatnonzero(self.adj[self.index[u]])]

    def edge_indices(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(self.adj, 1))
        return list(zip(rows.tolist(), cols.tolist()))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` label pairs with ``u < v``."""
        return [(self.labels[i], self.labels[j]) for i, j in self.edge_indices()]

    def complement(self) -> Graph:
        comp = ~self.adj
        np.fill_diagonal(comp, False)
        return Graph(self.labels, comp, self.kind, self.identity_policy, self.group_label, "complement")

    def induced(self, labels: Iterable[int]) -> Graph:
        idx = sorted(self.index[v] for v in set(labels))
        sub = self.adj[np.ix_(idx, idx)]
        return Graph(tuple(self.labels[i] for i in idx), sub, self.kind, self.identity_policy, self.group_label,
                     self.detail)


@dataclass(frozen=True, eq=False)
class DirectedPowerGraph:
    """``arcs[u, v]`` is true iff u is a power of v and u != v."""

    arcs: np.ndarray
    group_label: str = ""

    @property
    def vertex_count(self) -> int:
        return self.arcs.shape[0]

    def arc_list(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(self.arcs)
        return list(zip(rows.tolist(), cols.tolist()))

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.arcs[u, v])


class Equality(NamedTuple):
    equal: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.equal


def _row_masks(adj: np.ndarray) -> list[int]:
    if adj.shape[0] == 0:
        return []
    packed = np.packbits(adj, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _check_policy(identity_policy: str) -> None:
    if identity_policy not in POLICIES:
        raise ValueError(f"identity_policy must be one of {POLICIES}, got {identity_policy!r}")


def _finish(G: FiniteGroup, adj: np.ndarray, kind: str, identity_policy: str, detail: str = "") -> Graph:
    np.fill_diagonal(adj, False)
    labels = tuple(range(G.order))
    if identity_policy == "exclude":
        keep = [x for x in labels if x != G.identity]
        adj = adj[np.ix_(keep, keep)]
        labels = tuple(keep)
    return Graph(labels, adj, kind, identity_policy, G.label, detail)


def _intersection_sizes(G: FiniteGroup) -> np.ndarray:
    # float32 matmul is exact for counts below 2**24
    m = G.power_members.astype(np.float32)
    return np.rint(m @ m.T).astype(np.int64)


def build_graph(G: FiniteGroup, kind: str, identity_policy: str = "include") -> Graph:
    """Build the power, enhanced power or commuting graph of ``G``.

    The enhanced test uses the fact that for commuting x, y the group <x, y>
    has order o(x)o(y)/|<x> & <y>| and exponent lcm(o(x), o(y)), so it is
    cyclic exactly when the intersection has order gcd(o(x), o(y)).
    """
    _check_policy(identity_policy)
    if kind == "power":
        adj = G.power_members | G.power_members.T
    elif kind == "enhanced":
        orders = G.orders.astype(np.int64)
        adj = G.commutes & (_intersection_sizes(G) == np.gcd.outer(orders, orders))
    elif kind == "commuting":
        adj = G.commutes.copy()
    else:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    return _finish(G, adj, kind, identity_policy)


def directed_power_graph(G: FiniteGroup) -> DirectedPowerGraph:
    arcs = G.power_members.T.copy()
    np.fill_diagonal(arcs, False)
    return DirectedPowerGraph(arcs, G.label)


def enhanced_from_directed(D: DirectedPowerGraph, identity_policy: str = "include", identity: int = 0) -> Graph:
    """x ~ y iff some z dominates both (each is z or has an arc into z)."""
    _check_policy(identity_policy)
    n = D.vertex_count
    reach = (D.arcs | np.eye(n, dtype=bool)).astype(np.float32)
    adj = (reach @ reach.T) > 0.5
    np.fill_diagonal(adj, False)
    labels = tuple(range(n))
    if identity_policy == "exclude":
        keep = [x for x in labels if x != identity]
        adj = adj[np.ix_(keep, keep)]
        labels = tuple(keep)
    return Graph(labels, adj, "enhanced", identity_policy, D.group_label, "from-directed")


def prime_graph(G: FiniteGroup) -> Graph:
    """Gruenberg-Kegel graph: primes of |G|, joined when G has an element of order pq."""
    if G.order == 1:
        raise TrivialGroup("the trivial group has no prime graph")
    primes = prime_divisors(G.order)
    orders = G.orders
    k = len(primes)
    adj = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(i + 1, k):
            adj[i, j] = adj[j, i] = bool((orders % (primes[i] * primes[j]) == 0).any())
    return Graph(tuple(primes), adj, "prime", "include", G.label)


def _same_vertices(A: Graph, B: Graph) -> None:
    if A.labels != B.labels or A.identity_policy != B.identity_policy:
        raise VertexMismatch(
            f"vertex sets differ: {A.vertex_count} ({A.identity_policy}) vs {B.vertex_count} ({B.identity_policy})"
        )


def _first_pair(mask: np.ndarray, labels) -> tuple[int, int] | None:
    hits = np.argwhere(np.triu(mask, 1))
    if hits.size == 0:
        return None
    i, j = hits[0]
    return labels[i], labels[j]


def difference_graph(A: Graph, B: Graph) -> Graph:
    """Edges of ``A`` that are not edges of ``B``; ``B`` must be a subgraph of ``A``."""
    _same_vertices(A, B)
    extra = _first_pair(B.adj & ~A.adj, A.labels)
    if extra is not None:
        raise NotSubgraph(f"edge {extra} of {B.kind} is not an edge of {A.kind}")
    return Graph(A.labels, A.adj & ~B.adj, "difference", A.identity_policy, A.group_label, f"{A.kind}-{B.kind}")


def graphs_equal(A: Graph, B: Graph) -> Equality:
    _same_vertices(A, B)
    pair = _first_pair(A.adj ^ B.adj, A.labels)
    return Equality(pair is None, pair)


def is_edge_subset(B: Graph, A: Graph) -> bool:
    _same_vertices(A, B)
    return not (B.adj & ~A.adj).any()
