"""Quadratic-form maximization over the standard simplex.

Three weight schemes share one engine:

* PLAIN  - coefficient of x_i x_j is 2 a_ij (the graph Lagrangian x^T A x);
* VERTEX - cl(i)/(cl(i)-1) + cl(j)/(cl(j)-1) on structural edges;
* EDGE   - 2 cl(ij)/(cl(ij)-1) on structural edges.

The engine is replicator dynamics x <- x * (Mx) / (x^T M x): it preserves
the simplex exactly, needs no projection, and its fixed points equalize
(Mx)_i across the support, which is exactly the stationarity the theory
asks of maximizers.  A uniform point on a maximum clique is always
evaluated and kept as a floor for the returned value.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

import numpy as np

from . import backend
from .cliques import CliqueProfile, clique_profile, max_clique
from .graphs import WeightedGraph, _complete_multipartite_parts
from .rng import CounterRng

SUPPORT_EPS = 1e-10        # entries below this are reported as zero support
SIMPLEX_ATOL = 1e-9        # input validation slack
# entry-change stop for the replicator; the form value converges roughly
# quadratically in the entry drift, so 1e-8 already gives ~1e-15 values
DEFAULT_TOL = 1e-8
MAX_ITER = 100000
ASCENT_SLACK = 1e-12       # allowed rounding dip in the debug monotonicity check


class WeightScheme(str, Enum):
    PLAIN = "plain"
    VERTEX = "vertex"
    EDGE = "edge"


class StructureCheck(NamedTuple):
    ok: bool
    reason: Optional[str]


@dataclass(frozen=True)
class MaximizeResult:
    point: np.ndarray
    value: float
    support: tuple[int, ...]
    iterations: int
    # the greedy support-shrinking pass may miss a smaller support; the
    # reported value is unaffected
    support_minimality: str = "heuristic"


def scheme_matrix(graph: WeightedGraph, scheme: WeightScheme,
                  profile: Optional[CliqueProfile] = None) -> np.ndarray:
    """Symmetric coefficient matrix M with the form value x^T M x."""
    scheme = WeightScheme(scheme)
    n = graph.n
    if scheme is WeightScheme.PLAIN:
        return np.array(graph.adjacency)
    if scheme is WeightScheme.VERTEX and any(d == 0 for d in graph.degrees):
        raise ValueError("vertex scheme undefined on graphs with isolated vertices")
    if profile is None:
        profile = clique_profile(graph)
    m = np.zeros((n, n))
    if scheme is WeightScheme.VERTEX:
        ratio = [cl / (cl - 1) if cl > 1 else 0.0 for cl in profile.cl_v]
        for u, v, _ in graph.edges:
            m[u, v] = m[v, u] = (ratio[u] + ratio[v]) / 2.0
    else:
        for u, v, cl in profile.cl_e:
            m[u, v] = m[v, u] = cl / (cl - 1)
    return m


def _validate_point(x, n: int) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (n,):
        raise ValueError(f"expected a point of dimension {n}, got shape {x.shape}")
    if float(x.min(initial=0.0)) < -SIMPLEX_ATOL:
        raise ValueError("simplex point has a negative entry")
    if abs(float(x.sum()) - 1.0) > SIMPLEX_ATOL:
        raise ValueError("simplex point does not sum to 1")
    return x


def form_value(graph: WeightedGraph, scheme: WeightScheme, x,
               profile: Optional[CliqueProfile] = None) -> float:
    m = scheme_matrix(graph, scheme, profile)
    x = _validate_point(x, graph.n)
    return float(x @ m @ x)


def support_of(x: np.ndarray) -> tuple[int, ...]:
    return tuple(int(i) for i in np.nonzero(np.asarray(x) > SUPPORT_EPS)[0])


def maximize_form(graph: WeightedGraph, scheme: WeightScheme, restarts: int = 16,
                  tol: float = DEFAULT_TOL, seed: int = 0, *, debug: bool = False,
                  profile: Optional[CliqueProfile] = None) -> MaximizeResult:
    """Best point over ``restarts`` replicator runs (uniform start plus
    Dirichlet-perturbed restarts seeded from ``seed``).

    Requires an entrywise nonnegative coefficient matrix.  A graph with no
    edges yields (e_0, 0.0).
    """
    n = graph.n
    m = scheme_matrix(graph, scheme, profile)
    if n and float(m.min()) < 0.0:
        raise ValueError("replicator dynamics require nonnegative coefficients")
    if graph.m == 0:
        point = np.zeros(n)
        if n:
            point[0] = 1.0
        return MaximizeResult(point, 0.0, (0,) if n else (), 0)

    starts = [np.full(n, 1.0 / n)]
    rng = CounterRng(seed)
    for _ in range(max(0, restarts - 1)):
        gamma = np.array([-np.log(1.0 - rng.uniform()) for _ in range(n)])
        total = float(gamma.sum())
        dirichlet = gamma / total if total > 0.0 else np.full(n, 1.0 / n)
        starts.append((np.full(n, 1.0 / n) + dirichlet) / 2.0)
    xs, vals, iters, min_gain = backend.replicator(m, np.vstack(starts), tol, MAX_ITER)
    if debug and min_gain < -ASCENT_SLACK * max(1.0, float(np.abs(vals).max())):
        raise AssertionError(f"replicator ascent violated: min gain {min_gain:.3e}")

    candidates = [(float(vals[i]), support_of(xs[i]), xs[i]) for i in range(xs.shape[0])]
    clique = max_clique(graph)
    floor_point = np.zeros(n)
    floor_point[list(clique)] = 1.0 / len(clique)
    floor_value = float(floor_point @ m @ floor_point)
    candidates.append((floor_value, tuple(clique), floor_point))
    # merge: max value, ties to the lexicographically smallest support set
    best_value, best_support, best_point = candidates[0]
    for value, supp, point in candidates[1:]:
        if value > best_value or (value == best_value and supp < best_support):
            best_value, best_support, best_point = value, supp, point

    # minimal-support refinement: drop the smallest support entry while the
    # value survives within tol (entries outside the support are hard-zeroed,
    # so the support shrinks strictly and the loop terminates)
    total_iters = int(iters)
    while len(best_support) > 1:
        smallest = min(best_support, key=lambda i: best_point[i])
        keep = [i for i in best_support if i != smallest]
        trimmed = np.zeros(n)
        trimmed[keep] = np.asarray(best_point)[keep]
        trimmed /= trimmed.sum()
        xs2, vals2, it2, gain2 = backend.replicator(m, trimmed[None, :], tol, MAX_ITER)
        total_iters += int(it2)
        if debug and gain2 < -ASCENT_SLACK * max(1.0, abs(float(vals2[0]))):
            raise AssertionError(f"replicator ascent violated: min gain {gain2:.3e}")
        if float(vals2[0]) >= best_value - tol:
            best_value = float(vals2[0])
            best_point = xs2[0]
            best_support = support_of(best_point)
            if not best_support:
                break
        else:
            break

    if best_value < floor_value:  # the floor is part of the contract
        best_value, best_support, best_point = floor_value, tuple(clique), floor_point
    return MaximizeResult(np.asarray(best_point), best_value, tuple(best_support), total_iters)


def check_equality_structure(graph: WeightedGraph, x, tol: float = 1e-8,
                             profile: Optional[CliqueProfile] = None) -> StructureCheck:
    """Does supp(x) induce a complete omega(G)-partite graph whose parts each
    carry mass 1/omega (within tol)?  Returns (ok, reason-if-not)."""
    x = _validate_point(x, graph.n)
    supp = support_of(x)
    if not supp:
        return StructureCheck(False, "empty support")
    if profile is None:
        profile = clique_profile(graph)
    omega = profile.omega
    induced = graph.induced(supp)
    parts = _complete_multipartite_parts(induced)
    if parts is None:
        return StructureCheck(False, "support does not induce a complete multipartite graph")
    if len(parts) != omega:
        return StructureCheck(
            False, f"support induces {len(parts)} parts but the clique number is {omega}")
    for part in parts:
        mass = float(sum(x[supp[i]] for i in part))
        if abs(mass - 1.0 / omega) > tol:
            return StructureCheck(
                False, f"part mass {mass:.12g} differs from 1/{omega}")
    return StructureCheck(True, None)
