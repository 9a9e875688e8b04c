"""Isomorph-free small-graph enumeration and corpus-wide verification.

Canonical form: the lexicographically minimal upper-triangle bit string
over all vertex relabelings, bits in column order (0,1),(0,2),(1,2),
(0,3),... - the same pair order graph6 uses, so the canonical bits ARE the
minimal graph6 body.  Minimization is exact brute force over permutations,
organized as a placement search with two sound prunes: a branch is cut when
its packed prefix exceeds the best known prefix, and interchangeable twin
vertices (equal closed neighborhoods up to each other) are expanded once.

Enumeration is by augmentation: every (n)-vertex class arises from an
(n-1)-vertex class plus one new vertex with some neighborhood; dedup by
canonical form.  Exactly one representative per isomorphism class is kept.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence

from .bounds import BoundId, BoundInputs, compute_all_bounds
from .certify import classify_unweighted_equality, predicted_equality
from .graphs import WeightedGraph, to_graph6, to_graph_json
from .jsonio import dumps as _dumps
from .rng import CounterRng, derive_seed

MAX_ENUM_N = 8


# -- canonical form ---------------------------------------------------------


def graph_bits(graph: WeightedGraph) -> int:
    """Upper-triangle bits in column order, first pair most significant."""
    present = {(u, v) for u, v, _ in graph.edges}
    bits = 0
    for v in range(1, graph.n):
        for u in range(v):
            bits = (bits << 1) | (1 if (u, v) in present else 0)
    return bits


def graph_from_bits(n: int, bits: int) -> WeightedGraph:
    npairs = n * (n - 1) // 2
    edges = []
    pos = npairs - 1
    for v in range(1, n):
        for u in range(v):
            if (bits >> pos) & 1:
                edges.append((u, v, 1.0))
            pos -= 1
    return WeightedGraph(n, tuple(edges))


def canonical_bits(masks: Sequence[int]) -> int:
    """Minimal packed bit string over all relabelings of the given adjacency
    bitmasks (exact; prefix-pruned placement search with twin skipping)."""
    n = len(masks)
    if n <= 1:
        return 0
    npairs = n * (n - 1) // 2
    best: Optional[int] = None
    all_mask = (1 << n) - 1

    def dfs(placed: list[int], used: int, partial: int, done: int) -> None:
        nonlocal best
        k = len(placed)
        if k == n:
            if best is None or partial < best:
                best = partial
            return
        cands = []
        rest = all_mask & ~used
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            rest ^= b
            chunk = 0
            mv = masks[v]
            for p in placed:
                chunk = (chunk << 1) | ((mv >> p) & 1)
            cands.append((chunk, v))
        cands.sort()
        newdone = done + k
        shift = npairs - newdone
        tried: list[tuple[int, int]] = []
        for chunk, v in cands:
            newpartial = (partial << k) | chunk
            if best is not None and newpartial > (best >> shift):
                break  # cands sorted: every later branch is larger too
            twin = False
            for chunk2, u in tried:
                if chunk2 == chunk:
                    pair = (1 << u) | (1 << v)
                    if (masks[u] | pair) == (masks[v] | pair):
                        twin = True
                        break
            if twin:
                continue
            tried.append((chunk, v))
            dfs(placed + [v], used | (1 << v), newpartial, newdone)

    dfs([], 0, 0, 0)
    assert best is not None
    return best


def canonical_form(graph: WeightedGraph) -> int:
    return canonical_bits(graph.neighbor_masks)


# -- enumeration -------------------------------------------------------------

_canon_cache: dict[int, tuple[int, ...]] = {}


def clear_caches() -> None:
    _canon_cache.clear()


def _canonical_classes(n: int) -> tuple[int, ...]:
    if n in _canon_cache:
        return _canon_cache[n]
    if n == 1:
        out: tuple[int, ...] = (0,)
    else:
        prev = _canonical_classes(n - 1)
        found: set[int] = set()
        newbit = 1 << (n - 1)
        for bits in prev:
            base = graph_from_bits(n - 1, bits)
            base_masks = list(base.neighbor_masks) + [0]
            for nb in range(1 << (n - 1)):
                masks = list(base_masks)
                masks[n - 1] = nb
                rest = nb
                while rest:
                    b = rest & -rest
                    masks[b.bit_length() - 1] |= newbit
                    rest ^= b
                found.add(canonical_bits(masks))
        out = tuple(sorted(found))
    _canon_cache[n] = out
    return out


def enumerate_graphs(n: int) -> Iterator[WeightedGraph]:
    """One unit-weighted representative per isomorphism class, ascending
    canonical form.  1 <= n <= 8."""
    if not (1 <= n <= MAX_ENUM_N):
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    for bits in _canonical_classes(n):
        yield graph_from_bits(n, bits)


def count_classes(n: int) -> int:
    if not (1 <= n <= MAX_ENUM_N):
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    return len(_canonical_classes(n))


# -- random generators --------------------------------------------------------


def random_gnp(n: int, p: float, seed: int) -> WeightedGraph:
    """G(n, p) with unit weights; one uniform draw per vertex pair in
    lexicographic (u, v) order, deterministic given the seed."""
    if n < 1:
        raise ValueError("random_gnp requires n >= 1")
    if not (0.0 <= p <= 1.0):
        raise ValueError("edge probability must lie in [0, 1]")
    rng = CounterRng(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.uniform() < p:
                edges.append((u, v, 1.0))
    return WeightedGraph(n, tuple(edges))


def randomize_weights(graph: WeightedGraph, low: float, high: float,
                      signed: bool, seed: int) -> WeightedGraph:
    """Weights uniform in [low, high] per edge (canonical edge order), sign
    flipped with probability 1/2 when ``signed``; one magnitude draw plus,
    when signed, one sign draw per edge."""
    if not (0.0 < low <= high):
        raise ValueError("need 0 < low <= high")
    rng = CounterRng(seed)
    weights = []
    for _ in graph.edges:
        magnitude = low + rng.uniform() * (high - low)
        if signed and rng.uniform() < 0.5:
            magnitude = -magnitude
        weights.append(magnitude)
    return graph.with_weights(weights)


@dataclass(frozen=True)
class RandomModel:
    """Stress model: G(n, 0.5)-style graphs with randomized weights."""

    count: int
    n_low: int
    n_high: int
    p: float
    weight_low: float
    weight_high: float
    signed: bool
    seed: int

    def graphs(self) -> Iterator[tuple[Optional[str], WeightedGraph]]:
        for k in range(self.count):
            pick = CounterRng(derive_seed(self.seed, 3 * k))
            n = self.n_low + int(pick.uniform() * (self.n_high - self.n_low + 1))
            n = min(n, self.n_high)
            g = random_gnp(n, self.p, derive_seed(self.seed, 3 * k + 1))
            if self.weight_low != 1.0 or self.weight_high != 1.0 or self.signed:
                g = randomize_weights(g, self.weight_low, self.weight_high,
                                      self.signed, derive_seed(self.seed, 3 * k + 2))
            yield None, g


# -- corpus verification -------------------------------------------------------


class CorpusMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


@dataclass
class BoundTally:
    applicable: int = 0
    satisfied: int = 0
    equality: int = 0

    def absorb(self, other: "BoundTally") -> None:
        self.applicable += other.applicable
        self.satisfied += other.satisfied
        self.equality += other.equality


@dataclass
class VerificationReport:
    """Aggregated corpus results; merge is associative and commutative, so
    worker order can never change the outcome."""

    graphs_checked: int = 0
    tallies: dict[str, BoundTally] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    equality_mismatches: list[dict] = field(default_factory=list)

    def merge(self, other: "VerificationReport") -> None:
        self.graphs_checked += other.graphs_checked
        for key, tally in other.tallies.items():
            self.tallies.setdefault(key, BoundTally()).absorb(tally)
        self.violations.extend(other.violations)
        self.equality_mismatches.extend(other.equality_mismatches)

    def finalize(self) -> None:
        self.violations.sort(key=lambda rec: (rec["graph"], rec["bound_id"]))
        self.equality_mismatches.sort(key=lambda rec: (rec["graph"], rec["bound_id"]))
        self.tallies = {k: self.tallies[k] for k in sorted(self.tallies)}

    @property
    def ok(self) -> bool:
        return not self.violations and not self.equality_mismatches

    def to_dict(self) -> dict:
        return {
            "equality_mismatches": self.equality_mismatches,
            "graphs_checked": self.graphs_checked,
            "per_bound": {
                key: {"applicable": t.applicable, "equality": t.equality,
                      "satisfied": t.satisfied}
                for key, t in self.tallies.items()
            },
            "violations": self.violations,
        }

    def to_json(self) -> str:
        return _dumps(self.to_dict(), indent=2)

    def summary_table(self) -> str:
        lines = [f"graphs checked: {self.graphs_checked}",
                 f"{'bound':<20}{'applicable':>12}{'satisfied':>12}{'equality':>12}"]
        for key, t in self.tallies.items():
            lines.append(f"{key:<20}{t.applicable:>12}{t.satisfied:>12}{t.equality:>12}")
        lines.append(f"violations: {len(self.violations)}")
        lines.append(f"equality mismatches: {len(self.equality_mismatches)}")
        return "\n".join(lines)


def _graph_label(graph: WeightedGraph) -> str:
    if graph.is_unit_weighted:
        return to_graph6(graph)
    return to_graph_json(graph)


def check_graph(graph: WeightedGraph, checks: Iterable[BoundId],
                label: Optional[str] = None) -> VerificationReport:
    """Bound catalog plus equality-characterization audit for one graph."""
    report = VerificationReport(graphs_checked=1)
    gid = label if label is not None else _graph_label(graph)
    wanted = tuple(checks)
    try:
        ctx = BoundInputs(graph)
        results = compute_all_bounds(graph, wanted, inputs=ctx)
        classification = (classify_unweighted_equality(graph)
                          if graph.is_unit_weighted else None)
        for rep in results:
            tally = report.tallies.setdefault(rep.bound_id.value, BoundTally())
            if not rep.applicable:
                continue
            tally.applicable += 1
            if rep.violated():
                report.violations.append(
                    {"graph": gid, "bound_id": rep.bound_id.value, "slack": rep.slack})
            else:
                tally.satisfied += 1
            if rep.equality:
                tally.equality += 1
            if classification is not None and rep.equality is not None:
                predicted = predicted_equality(rep.bound_id, graph, classification)
                if predicted is not None and predicted != rep.equality:
                    report.equality_mismatches.append({
                        "graph": gid,
                        "bound_id": rep.bound_id.value,
                        "flag": rep.equality,
                        "verdict": classification.kind.value,
                    })
    except Exception as exc:  # a computation failure is itself a violation
        report.violations.append(
            {"graph": gid, "bound_id": f"error:{type(exc).__name__}", "slack": None})
    return report


def _normalize_checks(checks) -> tuple[BoundId, ...]:
    if checks is None or checks == "all":
        return tuple(BoundId)
    return tuple(BoundId(c) for c in checks)


def verify_corpus(n_max: int, checks="all", mode: CorpusMode = CorpusMode.EXHAUSTIVE,
                  random_model: Optional[RandomModel] = None,
                  jobs: int = 1) -> VerificationReport:
    """Run the catalog over a corpus and aggregate a report.

    EXHAUSTIVE mode walks every isomorphism class with 1 <= n <= n_max
    (n_max <= 8) and is fully deterministic; RANDOM mode walks the given
    RandomModel stream.  ``jobs`` > 1 splits the corpus across processes;
    the merged result is independent of the split.
    """
    mode = CorpusMode(mode)
    wanted = _normalize_checks(checks)
    if mode is CorpusMode.EXHAUSTIVE:
        if not (1 <= n_max <= MAX_ENUM_N):
            raise ValueError(f"exhaustive mode requires 1 <= n_max <= {MAX_ENUM_N}")
        stream: Iterable[tuple[Optional[str], WeightedGraph]] = (
            (None, g) for n in range(1, n_max + 1) for g in enumerate_graphs(n))
    else:
        if random_model is None:
            raise ValueError("random mode requires a RandomModel")
        stream = random_model.graphs()

    total = VerificationReport()
    if jobs <= 1:
        for label, graph in stream:
            total.merge(check_graph(graph, wanted, label))
    else:
        payload = [(label, to_graph_json(graph)) for label, graph in stream]
        chunks = [payload[i::jobs] for i in range(jobs)]
        import multiprocessing as mp

        with mp.get_context("fork").Pool(jobs) as pool:
            partials = pool.starmap(
                _check_chunk, [(chunk, [c.value for c in wanted]) for chunk in chunks])
        for part in partials:
            total.merge(part)
    total.finalize()
    return total


def _check_chunk(payload: list[tuple[Optional[str], str]],
                 checks: list[str]) -> VerificationReport:
    from .graphs import parse_graph_json

    wanted = tuple(BoundId(c) for c in checks)
    out = VerificationReport()
    for label, text in payload:
        out.merge(check_graph(parse_graph_json(text), wanted, label))
    return out


def write_corpus(path: str, n_max: int) -> int:
    """One graph6 line per isomorphism class, n = 1..n_max; returns the count."""
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for n in range(1, n_max + 1):
            for graph in enumerate_graphs(n):
                fh.write(to_graph6(graph) + "\n")
                count += 1
    return count
