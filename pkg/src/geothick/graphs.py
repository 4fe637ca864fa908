"""Subset-inclusion graphs G_k(n) and small reference graphs.

Vertices of an incidence graph are ``SubsetVertex`` bit-sets over the ground
set ``{0..n-1}``; the canonical order lists the singletons 0..n-1 first and
then the k-subsets lexicographically.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import InvalidParametersError

MAX_GROUND_SET = 64


@dataclass(frozen=True, order=True)
class SubsetVertex:
    """A subset of the ground set stored as a bit mask."""

    mask: int

    @classmethod
    def of(cls, members: Iterable[int]) -> "SubsetVertex":
        mask = 0
        for m in members:
            if not 0 <= m < MAX_GROUND_SET:
                raise InvalidParametersError(f"member {m} outside ground set")
            mask |= 1 << m
        return cls(mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.mask.bit_length()) if self.mask >> i & 1)

    @property
    def cardinality(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, item: int) -> bool:
        return bool(self.mask >> item & 1)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class SimpleGraph:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v or not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise InvalidParametersError(f"bad edge {(u, v)}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidParametersError(f"duplicate edge {key}")
            seen.add(key)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency()]

    def edge_subgraph(self, edge_ids: Iterable[int]) -> "SimpleGraph":
        return SimpleGraph(self.num_vertices, tuple(self.edges[i] for i in edge_ids))


@dataclass(frozen=True)
class IncidenceGraph(SimpleGraph):
    """Bipartite containment graph between singletons and k-subsets.

    May hold only some of the k-subsets (fixtures use partial graphs); use
    ``is_complete`` to test for the full G_k(n).
    """

    n: int = 0
    k: int = 0
    vertices: tuple[SubsetVertex, ...] = field(default=())

    def __post_init__(self):
        super().__post_init__()
        if len(self.vertices) != self.num_vertices:
            raise InvalidParametersError("vertex list does not match vertex count")
        for v in self.vertices:
            if v.mask >> self.n:
                raise InvalidParametersError(f"vertex {v} outside ground set of size {self.n}")
            if v.cardinality not in (1, self.k):
                raise InvalidParametersError(f"vertex {v} is neither singleton nor {self.k}-set")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidParametersError("duplicate vertices")
        for u, v in self.edges:
            a, b = self.vertices[u], self.vertices[v]
            small, big = (a, b) if a.cardinality < b.cardinality else (b, a)
            if small.cardinality != 1 or big.cardinality != self.k or small.mask & ~big.mask:
                raise InvalidParametersError(f"edge {a}-{b} is not a containment")

    def is_singleton(self, v: int) -> bool:
        return self.vertices[v].cardinality == 1

    @property
    def singletons(self) -> list[int]:
        """Indices of singleton vertices."""
        return [i for i, v in enumerate(self.vertices) if v.cardinality == 1]

    @property
    def ksets(self) -> list[int]:
        """Indices of k-subset vertices."""
        return [i for i, v in enumerate(self.vertices) if v.cardinality == self.k]

    def singleton_index(self, member: int) -> int:
        return self.vertices.index(SubsetVertex.of([member]))

    def incident_edges(self, v: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if v in e]

    def is_complete(self) -> bool:
        return (self.num_vertices == self.n + comb(self.n, self.k)
                and len(self.edges) == self.k * comb(self.n, self.k))


def incidence_subgraph(n: int, k: int, ksets: Sequence[Iterable[int]]) -> IncidenceGraph:
    """The singletons of {0..n-1} plus the given k-subsets, with all containment edges.

    Vertex order is canonical: singletons first, then k-subsets sorted
    lexicographically by members.
    """
    if k < 2 or k > n or n > MAX_GROUND_SET:
        raise InvalidParametersError(f"need 2 <= k <= n <= {MAX_GROUND_SET}, got k={k}, n={n}")
    subsets = sorted({tuple(sorted(s)) for s in ksets})
    for s in subsets:
        if len(s) != k or s[0] < 0 or s[-1] >= n:
            raise InvalidParametersError(f"bad {k}-subset {s}")
    vertices = [SubsetVertex.of([i]) for i in range(n)]
    edges = []
    for s in subsets:
        idx = len(vertices)
        vertices.append(SubsetVertex.of(s))
        edges.extend((m, idx) for m in s)
    return IncidenceGraph(len(vertices), tuple(edges), n=n, k=k, vertices=tuple(vertices))


def generate_incidence_graph(k: int, n: int) -> IncidenceGraph:
    """G_k(n): singletons and k-subsets of {0..n-1}, joined by containment."""
    if k < 2 or k > n:
        raise InvalidParametersError(f"need 2 <= k <= n, got k={k}, n={n}")
    return incidence_subgraph(n, k, combinations(range(n), k))


def tripletons(g: IncidenceGraph) -> list[SubsetVertex]:
    return [g.vertices[i] for i in g.ksets]


def is_bipartite(g: SimpleGraph) -> bool:
    adj = g.adjacency()
    color = [-1] * g.num_vertices
    for s in range(g.num_vertices):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple(combinations(range(n), 2)))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def cube_graph() -> SimpleGraph:
    """The 3-cube Q3 with vertices 0..7 labelled by bit strings."""
    edges = [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
    return SimpleGraph(8, tuple(edges))
