"""Weighted simple graphs: construction, parsing, serialization, structure.

The one graph type used everywhere is :class:`WeightedGraph`: immutable,
0-indexed, edges stored canonically as (u, v, w) with u < v and finite
nonzero real weight.  Structural queries (components, complement, complete
multipartite detection) ignore weights entirely.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .jsonio import dumps as _dumps, format_float


class GraphParseError(ValueError):
    """Malformed graph input; the message names the offending line or byte."""


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with finite nonzero real edge weights.

    Instances are immutable (derived views are cached lazily) and safe to
    share across concurrent workers.
    """

    n: int
    edges: tuple[tuple[int, int, float], ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        norm = []
        for edge in self.edges:
            u, v, w = edge
            u, v, w = int(u), int(v), float(w)
            if u > v:
                u, v = v, u
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            if not math.isfinite(w) or w == 0.0:
                raise ValueError(f"edge ({u},{v}) has invalid weight {w!r}")
            norm.append((u, v, w))
        norm.sort(key=lambda e: (e[0], e[1]))
        for a, b in zip(norm, norm[1:]):
            if a[0] == b[0] and a[1] == b[1]:
                raise ValueError(f"duplicate edge ({a[0]},{a[1]})")
        object.__setattr__(self, "edges", tuple(norm))

    # -- basic views ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        d = [0] * self.n
        for u, v, _ in self.edges:
            d[u] += 1
            d[v] += 1
        return tuple(d)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-vertex adjacency as bitmasks (vertex v is bit 1 << v)."""
        masks = [0] * self.n
        for u, v, _ in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Dense symmetric weight matrix (read-only)."""
        a = np.zeros((self.n, self.n))
        for u, v, w in self.edges:
            a[u, v] = w
            a[v, u] = w
        a.setflags(write=False)
        return a

    @cached_property
    def _weight_map(self) -> dict[tuple[int, int], float]:
        return {(u, v): w for u, v, w in self.edges}

    def weight(self, u: int, v: int) -> float:
        """Weight of edge {u, v}; 0.0 for non-edges (symmetric lookup)."""
        if u > v:
            u, v = v, u
        return self._weight_map.get((u, v), 0.0)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._weight_map

    def neighbors(self, v: int) -> tuple[int, ...]:
        mask = self.neighbor_masks[v]
        return tuple(_iter_bits(mask))

    @cached_property
    def is_unit_weighted(self) -> bool:
        return all(w == 1.0 for _, _, w in self.edges)

    def structure(self) -> "WeightedGraph":
        """Same edge set, all weights 1."""
        if self.is_unit_weighted:
            return self
        return WeightedGraph(self.n, tuple((u, v, 1.0) for u, v, _ in self.edges))

    def with_weights(self, weights: Sequence[float]) -> "WeightedGraph":
        """Same edge set, weights replaced positionally (canonical edge order)."""
        if len(weights) != self.m:
            raise ValueError(f"expected {self.m} weights, got {len(weights)}")
        return WeightedGraph(self.n, tuple((u, v, float(w)) for (u, v, _), w in zip(self.edges, weights)))

    def induced(self, vertices: Iterable[int]) -> "WeightedGraph":
        """Induced subgraph; labels compacted in ascending order of ``vertices``."""
        verts = sorted(set(vertices))
        if verts and not (0 <= verts[0] and verts[-1] < self.n):
            raise ValueError("induced vertex set out of range")
        index = {v: i for i, v in enumerate(verts)}
        edges = tuple(
            (index[u], index[v], w) for u, v, w in self.edges if u in index and v in index
        )
        return WeightedGraph(len(verts), edges)


class StripResult(NamedTuple):
    graph: WeightedGraph
    removed: frozenset[int]
    original_indices: tuple[int, ...]  # new label -> original label


@dataclass(frozen=True)
class Partition:
    """Pairwise disjoint nonempty vertex sets; parts ordered by least element."""

    parts: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for part in self.parts:
            if not part:
                raise ValueError("empty part in partition")
            if seen & part:
                raise ValueError("overlapping parts in partition")
            seen |= part
        ordered = tuple(sorted((frozenset(p) for p in self.parts), key=min))
        object.__setattr__(self, "parts", ordered)

    @property
    def r(self) -> int:
        return len(self.parts)

    @cached_property
    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for part in self.parts:
            out |= part
        return frozenset(out)

    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(p) for p in self.parts))


def _iter_bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


# -- structural queries -----------------------------------------------


def connected_components(graph: WeightedGraph) -> list[frozenset[int]]:
    """Maximal connected vertex sets, ordered by least vertex (weights ignored)."""
    masks = graph.neighbor_masks
    unseen = (1 << graph.n) - 1
    out = []
    while unseen:
        start = unseen & -unseen
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= masks[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(frozenset(_iter_bits(comp)))
        unseen &= ~comp
    return out


def complement(graph: WeightedGraph) -> WeightedGraph:
    """Structural complement with unit weights."""
    edges = []
    present = {(u, v) for u, v, _ in graph.edges}
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            if (u, v) not in present:
                edges.append((u, v, 1.0))
    return WeightedGraph(graph.n, tuple(edges))


def strip_isolated(graph: WeightedGraph) -> StripResult:
    """Drop degree-0 vertices, compacting labels; keeps the original labels."""
    kept = tuple(v for v in range(graph.n) if graph.degrees[v] > 0)
    removed = frozenset(v for v in range(graph.n) if graph.degrees[v] == 0)
    index = {v: i for i, v in enumerate(kept)}
    edges = tuple((index[u], index[v], w) for u, v, w in graph.edges)
    return StripResult(WeightedGraph(len(kept), edges), removed, kept)


def _complete_multipartite_parts(graph: WeightedGraph) -> Optional[list[frozenset[int]]]:
    """Parts when the structure is complete multipartite, else None.

    Works for any graph: candidate parts are the complement's connected
    components; the structure is complete multipartite iff every candidate
    part is independent (equivalently, every complement component is a
    clique in the complement).
    """
    comp = complement(graph)
    parts = connected_components(comp)
    comp_masks = comp.neighbor_masks
    for part in parts:
        size = len(part)
        for v in part:
            # complement degree inside the component must reach all others
            if (comp_masks[v]).bit_count() != size - 1:
                return None
    return parts


def complete_multipartite_partition(graph: WeightedGraph) -> Optional[Partition]:
    """Unique complete-multipartite partition of the structure, if one exists.

    Two vertices share a part iff they are non-adjacent.  Requires a graph
    with no isolated vertices (an isolated vertex would make the notion
    ambiguous); raises ValueError otherwise.
    """
    if any(d == 0 for d in graph.degrees):
        raise ValueError("graph has an isolated vertex")
    parts = _complete_multipartite_parts(graph)
    if parts is None:
        return None
    return Partition(tuple(parts))


# -- graph6 ------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> WeightedGraph:
    """Decode one graph6 line into a unit-weighted graph (n <= 65536)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphParseError("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not (63 <= b <= 126):
            raise GraphParseError(f"invalid graph6 byte 0x{b:02x} at offset {i}")
    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    else:
        if len(data) >= 2 and data[1] == 126:
            raise GraphParseError("graph6 values beyond 65536 vertices are unsupported (offset 1)")
        if len(data) < 4:
            raise GraphParseError("truncated graph6 header: need 3 size bytes after '~'")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    if n > 65536:
        raise GraphParseError(f"graph6 header declares n={n} > 65536")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise GraphParseError(
            f"truncated graph6 bit field: need {need} bytes after offset {pos}, found {len(body)}"
        )
    if len(body) > need:
        raise GraphParseError(f"trailing data at offset {pos + need}")
    edges = []
    bit = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[bit // 6] - 63
            if (byte >> (5 - bit % 6)) & 1:
                edges.append((u, v, 1.0))
            bit += 1
    # padding bits must be zero
    while bit < 6 * need:
        byte = body[bit // 6] - 63
        if (byte >> (5 - bit % 6)) & 1:
            raise GraphParseError(f"nonzero padding bit at offset {pos + bit // 6}")
        bit += 1
    return WeightedGraph(n, tuple(edges))


def to_graph6(graph: WeightedGraph) -> str:
    """Encode the structure (weights ignored) as a graph6 line."""
    n = graph.n
    if n > 65536:
        raise ValueError("graph6 output limited to 65536 vertices")
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    present = {(u, v) for u, v, _ in graph.edges}
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return bytes(head + body).decode("ascii")


# -- weighted edge list -------------------------------------------------


def _parse_weight(token: str, lineno: int) -> float:
    low = token.lower()
    if "nan" in low or "inf" in low:
        raise GraphParseError(f"line {lineno}: weight {token!r} is not a finite decimal")
    try:
        w = float(token)
    except ValueError:
        raise GraphParseError(f"line {lineno}: weight {token!r} is not a decimal") from None
    if w == 0.0:
        raise GraphParseError(f"line {lineno}: zero weight (structural ambiguity)")
    return w


def parse_weighted_edgelist(text: str) -> WeightedGraph:
    """Parse the .wel format: header "n m", then m lines "u v w".

    '#' comment lines and blank lines are skipped.  Zero weights, self-loops
    and duplicate pairs are errors.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise GraphParseError("empty edge-list input")
    lineno, header = rows[0]
    fields = header.split()
    if len(fields) != 2:
        raise GraphParseError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise GraphParseError(f"line {lineno}: header must be two integers") from None
    if n < 0 or m < 0:
        raise GraphParseError(f"line {lineno}: negative count in header")
    body = rows[1:]
    if len(body) != m:
        raise GraphParseError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    seen = set()
    for lineno, line in body:
        fields = line.split()
        if len(fields) != 3:
            raise GraphParseError(f"line {lineno}: expected 'u v w', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: endpoints must be integers") from None
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {lineno}: endpoint out of range [0, {n})")
        w = _parse_weight(fields[2], lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"line {lineno}: duplicate edge ({key[0]},{key[1]})")
        seen.add(key)
        edges.append((key[0], key[1], w))
    return WeightedGraph(n, tuple(edges))


def to_weighted_edgelist(graph: WeightedGraph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    for u, v, w in graph.edges:
        lines.append(f"{u} {v} {format_float(w)}")
    return "\n".join(lines) + "\n"


# -- JSON ----------------------------------------------------------------


def to_graph_json(graph: WeightedGraph) -> str:
    # field order fixed: "n" first, then "edges"
    return _dumps({"n": graph.n, "edges": [[u, v, w] for u, v, w in graph.edges]})


def parse_graph_json(text: str) -> WeightedGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphParseError('graph JSON must be {"n": int, "edges": [[u,v,w],...]}')
    try:
        return WeightedGraph(int(obj["n"]), tuple((e[0], e[1], e[2]) for e in obj["edges"]))
    except (ValueError, TypeError, IndexError) as exc:
        raise GraphParseError(f"invalid graph JSON: {exc}") from None
