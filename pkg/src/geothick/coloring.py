"""Exact vertex coloring by DSATUR branch and bound."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence


@dataclass(frozen=True)
class ConflictGraph:
    """Nodes are edge ids of a drawn graph; adjacency marks crossing pairs."""

    adjacency: tuple[frozenset, ...]

    @classmethod
    def from_pairs(cls, num_nodes: int, pairs) -> "ConflictGraph":
        adj: list[set[int]] = [set() for _ in range(num_nodes)]
        for a, b in pairs:
            if a == b:
                raise ValueError("self-conflict")
            adj[a].add(b)
            adj[b].add(a)
        return cls(tuple(frozenset(s) for s in adj))

    @property
    def num_nodes(self) -> int:
        return len(self.adjacency)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a in range(self.num_nodes) for b in self.adjacency[a] if a < b)


def greedy_clique(adj: Sequence[frozenset]) -> list[int]:
    best: list[int] = []
    for start in sorted(range(len(adj)), key=lambda v: -len(adj[v])):
        clique = [start]
        cand = set(adj[start])
        while cand:
            v = max(cand, key=lambda w: (len(adj[w] & cand), -w))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def dsatur_greedy(adj: Sequence[frozenset]) -> list[int]:
    n = len(adj)
    colors = [-1] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0),
                key=lambda u: (len(sat[u]), len(adj[u]), -u))
        c = 0
        while c in sat[v]:
            c += 1
        colors[v] = c
        for w in adj[v]:
            sat[w].add(c)
    return colors


def exact_coloring(cg: ConflictGraph, cap: int) -> Optional[list[int]]:
    """A minimum coloring if the chromatic number is at most ``cap``, else None."""
    adj = cg.adjacency
    n = len(adj)
    if n == 0:
        return []
    lower = len(greedy_clique(adj))
    if lower > cap:
        return None
    greedy = dsatur_greedy(adj)
    best_k = max(greedy) + 1
    best: Optional[list[int]] = greedy
    if best_k > cap:
        best_k, best = cap + 1, None
    if best_k == lower:
        return best

    colors = [-1] * n

    def search(done: int, used: int) -> bool:
        nonlocal best_k, best
        if done == n:
            best_k, best = used, colors.copy()
            return best_k == lower
        v, forbidden = -1, set()
        key = (-1, -1)
        for u in range(n):
            if colors[u] >= 0:
                continue
            f = {colors[w] for w in adj[u] if colors[w] >= 0}
            k = (len(f), len(adj[u]))
            if k > key:
                key, v, forbidden = k, u, f
        for c in range(used):
            if c not in forbidden:
                colors[v] = c
                if search(done + 1, used):
                    return True
                colors[v] = -1
        if used + 1 < best_k:
            colors[v] = used
            if search(done + 1, used + 1):
                return True
            colors[v] = -1
        return False

    search(0, 0)
    return best


def chromatic_number_exact(cg: ConflictGraph, cap: int) -> Optional[int]:
    """Exact chromatic number, or None when it exceeds ``cap``."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    coloring = exact_coloring(cg, cap)
    if coloring is None:
        return None
    return max(coloring, default=-1) + 1
