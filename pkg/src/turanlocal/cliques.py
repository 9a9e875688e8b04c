"""Exact clique machinery: maximum clique, per-vertex/per-edge clique profile.

All quantities are structural (weights are ignored).  The solver is a
branch-and-bound search with a greedy-coloring upper bound; vertices are
reordered by descending degree once at the root and processed in stable
index order below.  Subproblem clique numbers are memoized by candidate
bitmask, which lets the per-edge profile reuse work across edges that share
a common neighborhood.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .graphs import WeightedGraph
from .jsonio import dumps as _dumps


@dataclass(frozen=True)
class CliqueProfile:
    """Clique number plus cl(v) for every vertex and cl(e) for every edge."""

    omega: int
    cl_v: tuple[int, ...]
    cl_e: tuple[tuple[int, int, int], ...]  # (u, v, cl), sorted by (u, v)

    @cached_property
    def _edge_map(self) -> dict[tuple[int, int], int]:
        return {(u, v): c for u, v, c in self.cl_e}

    def cl_edge(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self._edge_map[(u, v)]

    def to_json(self) -> str:
        return _dumps({
            "omega": self.omega,
            "cl_v": list(self.cl_v),
            "cl_e": [[u, v, c] for u, v, c in self.cl_e],
        })


def _iter_bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class CliqueSolver:
    """Branch-and-bound clique-number queries over one graph's bitmasks.

    The memo table lives for the lifetime of the solver, i.e. one profile
    computation or one max-clique extraction.
    """

    def __init__(self, graph: WeightedGraph):
        self.n = graph.n
        self.masks = graph.neighbor_masks
        # root order: descending degree, stable by index
        order = sorted(range(self.n), key=lambda v: (-graph.degrees[v], v))
        self._new_of_old = [0] * self.n
        for new, old in enumerate(order):
            self._new_of_old[old] = new
        self._old_of_new = order
        self._adj = [0] * self.n
        for u, v, _ in graph.edges:
            nu, nv = self._new_of_old[u], self._new_of_old[v]
            self._adj[nu] |= 1 << nv
            self._adj[nv] |= 1 << nu
        self._memo: dict[int, int] = {}

    def _translate(self, mask: int) -> int:
        out = 0
        for v in _iter_bits(mask):
            out |= 1 << self._new_of_old[v]
        return out

    def omega_of_mask(self, mask: int) -> int:
        """Clique number of the subgraph induced by ``mask`` (original labels)."""
        return self._omega(self._translate(mask))

    def omega(self) -> int:
        return self._omega((1 << self.n) - 1)

    def _omega(self, cand: int) -> int:
        if cand == 0:
            return 0
        hit = self._memo.get(cand)
        if hit is not None:
            return hit
        adj = self._adj
        best = 0

        def expand(size: int, p: int) -> None:
            nonlocal best
            if p == 0:
                if size > best:
                    best = size
                return
            order, colors = _color_sort(p, adj)
            for i in range(len(order) - 1, -1, -1):
                if size + colors[i] <= best:
                    return
                v = order[i]
                expand(size + 1, p & adj[v])
                p &= ~(1 << v)

        expand(0, cand)
        self._memo[cand] = best
        return best

    def lexmin_max_clique(self, mask: int) -> tuple[int, ...]:
        """Maximum clique of the induced subgraph whose sorted vertex tuple is
        lexicographically smallest (original labels)."""
        k = self.omega_of_mask(mask)
        if k == 0:
            return ()
        chosen: list[int] = []
        cand = mask
        while len(chosen) < k:
            for v in _iter_bits(cand):  # ascending original index
                above = ~((1 << (v + 1)) - 1)
                rest = cand & self.masks[v] & above
                if self._omega(self._translate(rest)) >= k - len(chosen) - 1:
                    chosen.append(v)
                    cand = rest
                    break
            else:  # pragma: no cover - guarded by the clique-number bound
                raise AssertionError("lexmin extraction lost the clique")
        return tuple(chosen)


def _color_sort(p: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy coloring of the candidate set; returns vertices grouped by
    color class with their (1-based) color numbers, used as search bounds."""
    order: list[int] = []
    colors: list[int] = []
    color = 0
    rest = p
    while rest:
        color += 1
        avail = rest
        while avail:
            b = avail & -avail
            v = b.bit_length() - 1
            avail ^= b
            avail &= ~adj[v]
            rest ^= b
            order.append(v)
            colors.append(color)
    return order, colors


def clique_number(graph: WeightedGraph, restricted_to: Optional[Iterable[int]] = None) -> int:
    solver = CliqueSolver(graph)
    mask = _restriction_mask(graph, restricted_to)
    return solver.omega_of_mask(mask)


def max_clique(graph: WeightedGraph, restricted_to: Optional[Iterable[int]] = None) -> tuple[int, ...]:
    """Deterministic maximum clique: ties broken by lexicographically
    smallest sorted vertex tuple.  Empty input yields the empty clique."""
    solver = CliqueSolver(graph)
    mask = _restriction_mask(graph, restricted_to)
    return solver.lexmin_max_clique(mask)


def _restriction_mask(graph: WeightedGraph, restricted_to: Optional[Iterable[int]]) -> int:
    if restricted_to is None:
        return (1 << graph.n) - 1
    mask = 0
    for v in restricted_to:
        if not (0 <= v < graph.n):
            raise ValueError(f"restriction vertex {v} out of range")
        mask |= 1 << v
    return mask


def clique_profile(graph: WeightedGraph) -> CliqueProfile:
    """cl(v) = 1 + omega(G[N(v)]), cl(e) = 2 + omega(G[N(u) & N(v)])."""
    solver = CliqueSolver(graph)
    masks = graph.neighbor_masks
    cl_v = tuple(1 + solver.omega_of_mask(masks[v]) for v in range(graph.n))
    cl_e = tuple(
        (u, v, 2 + solver.omega_of_mask(masks[u] & masks[v])) for u, v, _ in graph.edges
    )
    omega = max(cl_v) if graph.n else 0
    return CliqueProfile(omega, cl_v, cl_e)


def maximal_cliques(graph: WeightedGraph) -> list[tuple[int, ...]]:
    """All maximal cliques (pivoting search, deterministic order)."""
    masks = graph.neighbor_masks
    out: list[tuple[int, ...]] = []

    def extend(r: list[int], p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(tuple(r))
            return
        # pivot: vertex of P|X covering most of P, ties to the lowest index
        pivot, cover = -1, -1
        for u in _iter_bits(p | x):
            c = (p & masks[u]).bit_count()
            if c > cover:
                pivot, cover = u, c
        for v in _iter_bits(p & ~masks[pivot]):
            r.append(v)
            extend(r, p & masks[v], x & masks[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    extend([], (1 << graph.n) - 1, 0)
    return out
