"""Exact chromatic number by branch and bound (intended for n <= ~10).

Lower bound from a maximum clique (pre-colored to break symmetry), upper
bound from a greedy first-fit coloring; k-colorability is decided by
backtracking on the most saturated uncolored vertex.
"""

from __future__ import annotations

from .cliques import max_clique
from .graphs import WeightedGraph


def chromatic_number(graph: WeightedGraph) -> int:
    n = graph.n
    if n == 0:
        return 0
    if graph.m == 0:
        return 1
    masks = graph.neighbor_masks
    clique = max_clique(graph)
    lower = len(clique)
    order = sorted(range(n), key=lambda v: (-graph.degrees[v], v))
    greedy = [0] * n
    for v in order:
        used = {greedy[u] for u in range(n) if greedy[u] and (masks[v] >> u) & 1}
        c = 1
        while c in used:
            c += 1
        greedy[v] = c
    upper = max(greedy)
    for k in range(lower, upper):
        if _colorable(graph, k, clique):
            return k
    return upper


def _colorable(graph: WeightedGraph, k: int, clique: tuple[int, ...]) -> bool:
    n = graph.n
    masks = graph.neighbor_masks
    color = [0] * n
    for i, v in enumerate(clique):
        color[v] = i + 1
    if len(clique) > k:
        return False

    def pick() -> int:
        best, best_key = -1, (-1, -1, 0)
        for v in range(n):
            if color[v]:
                continue
            sat = len({color[u] for u in range(n) if color[u] and (masks[v] >> u) & 1})
            key = (sat, graph.degrees[v], -v)
            if key > best_key:
                best, best_key = v, key
        return best

    def solve(done: int) -> bool:
        if done == n:
            return True
        v = pick()
        forbidden = {color[u] for u in range(n) if color[u] and (masks[v] >> u) & 1}
        used = max(color)
        for c in range(1, min(k, used + 1) + 1):  # at most one fresh color
            if c in forbidden:
                continue
            color[v] = c
            if solve(done + 1):
                return True
            color[v] = 0
        return False

    return solve(len(clique))
