"""The catalog of clique-localized spectral and counting bounds.

Every report is normalized to the shape ``lhs <= rhs`` so that
``slack = rhs - lhs >= -tol`` uniformly encodes "the theorem holds", for
upper bounds on the spectral radius and lower bounds on edge sums alike.
The equality flag uses a relative tolerance wide enough to absorb
eigensolver error and narrow enough that no non-extremal small graph is
misflagged (asserted in the test suite).

Sums feeding equality decisions use compensated (Kahan) summation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from .cliques import CliqueProfile, clique_profile, maximal_cliques
from .coloring import chromatic_number
from .graphs import WeightedGraph, connected_components
from .spectral import SpectrumSummary, spectrum

EQUALITY_RTOL = 1e-8
CHI_EXACT_MAX_N = 10  # exact coloring beyond this is out of budget


class BoundId(str, Enum):
    MAIN_WEIGHTED = "MAIN_WEIGHTED"
    LOCAL_EDGE = "LOCAL_EDGE"
    VERTEX_DEGREE = "VERTEX_DEGREE"
    LOCALIZED_WILF = "LOCALIZED_WILF"
    NIKIFOROV = "NIKIFOROV"
    WILF_EDGE = "WILF_EDGE"
    STANLEY = "STANLEY"
    HONG = "HONG"
    BRADAC = "BRADAC"
    SUM_CL_MINOR = "SUM_CL_MINOR"
    SUM_CL = "SUM_CL"
    TURAN_DEGREE = "TURAN_DEGREE"
    ADAK_CHANDRAN = "ADAK_CHANDRAN"
    EDWARDS_ELPHICK_W = "EDWARDS_ELPHICK_W"
    CVETKOVIC_W = "CVETKOVIC_W"
    PSI = "PSI"


def kahan_sum(values: Iterable[float]) -> float:
    """Compensated summation (Kahan-Babuska/Neumaier variant)."""
    total = 0.0
    carry = 0.0
    for v in values:
        t = total + v
        if abs(total) >= abs(v):
            carry += (total - t) + v
        else:
            carry += (v - t) + total
        total = t
    return total + carry


@dataclass(frozen=True)
class BoundReport:
    """One bound: identity, both sides, slack, equality flag, applicability."""

    bound_id: BoundId
    applicable: bool
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    slack: Optional[float] = None
    equality: Optional[bool] = None
    reason: Optional[str] = None
    extra: Optional[tuple[tuple[str, float], ...]] = None

    @staticmethod
    def of(bound_id: BoundId, lhs: float, rhs: float, **extra: float) -> "BoundReport":
        slack = rhs - lhs
        equality = abs(slack) <= EQUALITY_RTOL * max(1.0, abs(rhs))
        return BoundReport(bound_id, True, lhs, rhs, slack, equality,
                           extra=tuple(sorted(extra.items())) or None)

    @staticmethod
    def against_optional(bound_id: BoundId, value: float,
                         target: Optional[float]) -> "BoundReport":
        """Lower-bound report compared against a target that may be unknown."""
        if target is None:
            return BoundReport(bound_id, True, value, None, None, None)
        return BoundReport.of(bound_id, value, target)

    @staticmethod
    def inapplicable(bound_id: BoundId, reason: str) -> "BoundReport":
        return BoundReport(bound_id, False, reason=reason)

    def violated(self, rtol: float = EQUALITY_RTOL) -> bool:
        if not self.applicable or self.slack is None:
            return False
        return self.slack < -rtol * max(1.0, abs(self.rhs))

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "bound_id": self.bound_id.value,
            "equality": self.equality,
            "extra": dict(self.extra) if self.extra else None,
            "lhs": self.lhs,
            "reason": self.reason,
            "rhs": self.rhs,
            "slack": self.slack,
        }


@dataclass
class BoundInputs:
    """Lazy shared per-graph quantities so one catalog pass computes each once."""

    graph: WeightedGraph
    _profile: Optional[CliqueProfile] = field(default=None, repr=False)
    _spectrum: Optional[SpectrumSummary] = field(default=None, repr=False)
    _chi: Optional[int] = field(default=None, repr=False)
    _chi_done: bool = field(default=False, repr=False)

    @property
    def profile(self) -> CliqueProfile:
        if self._profile is None:
            self._profile = clique_profile(self.graph)
        return self._profile

    @property
    def summary(self) -> SpectrumSummary:
        if self._spectrum is None:
            self._spectrum = spectrum(self.graph)
        return self._spectrum

    @property
    def lam(self) -> float:
        return self.summary.spectral_radius

    def chi(self) -> Optional[int]:
        if not self._chi_done:
            self._chi = (chromatic_number(self.graph)
                         if self.graph.n <= CHI_EXACT_MAX_N else None)
            self._chi_done = True
        return self._chi


def _inputs(graph: WeightedGraph, inputs: Optional[BoundInputs]) -> BoundInputs:
    return inputs if inputs is not None else BoundInputs(graph)


def _require_unit(graph: WeightedGraph, bound_id: BoundId) -> Optional[BoundReport]:
    if not graph.is_unit_weighted:
        return BoundReport.inapplicable(bound_id, "statement requires unit weights")
    return None


# -- the weighted main bound and its unweighted specializations ----------


def bound_main_weighted(graph: WeightedGraph, inputs: Optional[BoundInputs] = None) -> BoundReport:
    """lambda(G) <= sqrt(2 sum_e ((cl(e)-1)/cl(e)) w(e)^2)."""
    ctx = _inputs(graph, inputs)
    prof = ctx.profile
    total = kahan_sum((cl - 1) / cl * w * w
                      for (_, _, w), (_, _, cl) in zip(graph.edges, prof.cl_e))
    return BoundReport.of(BoundId.MAIN_WEIGHTED, ctx.lam, math.sqrt(2.0 * total))


def bound_local_edge(graph: WeightedGraph, inputs: Optional[BoundInputs] = None) -> BoundReport:
    """lambda(G) <= sqrt(2 sum_e (cl(e)-1)/cl(e)) for unit weights."""
    bad = _require_unit(graph, BoundId.LOCAL_EDGE)
    if bad:
        return bad
    ctx = _inputs(graph, inputs)
    total = kahan_sum((cl - 1) / cl for _, _, cl in ctx.profile.cl_e)
    return BoundReport.of(BoundId.LOCAL_EDGE, ctx.lam, math.sqrt(2.0 * total))


def bound_vertex_degree(graph: WeightedGraph, inputs: Optional[BoundInputs] = None) -> BoundReport:
    """lambda(G) <= sqrt(sum_v d(v) (cl(v)-1)/cl(v))."""
    bad = _require_unit(graph, BoundId.VERTEX_DEGREE)
    if bad:
        return bad
    ctx = _inputs(graph, inputs)
    total = kahan_sum(d * (cl - 1) / cl
                      for d, cl in zip(graph.degrees, ctx.profile.cl_v))
    return BoundReport.of(BoundId.VERTEX_DEGREE, ctx.lam, math.sqrt(total))


def bound_localized_wilf(graph: WeightedGraph, inputs: Optional[BoundInputs] = None) -> BoundReport:
    """lambda(G) <= sum_v (cl(v)-1)/cl(v)."""
    bad = _require_unit(graph, BoundId.LOCALIZED_WILF)
    if bad:
        return bad
    ctx = _inputs(graph, inputs)
    total = kahan_sum((cl - 1) / cl for cl in ctx.profile.cl_v)
    return BoundReport.of(BoundId.LOCALIZED_WILF, ctx.lam, total)


# -- classical spectral bounds -------------------------------------------


def bound_classics(graph: WeightedGraph, inputs: Optional[BoundInputs] = None) -> list[BoundReport]:
    """NIKIFOROV (with r = omega), WILF_EDGE, STANLEY, HONG."""
    out = []
    for bound_id in (BoundId.NIKIFOROV, BoundId.WILF_EDGE, BoundId.STANLEY, BoundId.HONG):
        bad = _require_unit(graph, bound_id)
        if bad:
            out.append(bad)
            continue
        ctx = _inputs(graph, inputs)
        inputs = ctx
        n, m, lam = graph.n, graph.m, ctx.lam
        if bound_id is BoundId.NIKIFOROV:
            if n == 0:
                out.append(BoundReport.inapplicable(bound_id, "empty vertex set"))
                continue
            r = ctx.profile.omega
            out.append(BoundReport.of(bound_id, lam, math.sqrt(2.0 * (1.0 - 1.0 / r) * m), r=r))
        elif bound_id is BoundId.WILF_EDGE:
            if n == 0:
                out.append(BoundReport.inapplicable(bound_id, "empty vertex set"))
                continue
            out.append(BoundReport.of(bound_id, lam, math.sqrt(2.0 * (1.0 - 1.0 / n) * m)))
        elif bound_id is BoundId.STANLEY:
            out.append(BoundReport.of(bound_id, lam, -0.5 + math.sqrt(2.0 * m + 0.25)))
        else:  # HONG
            if n == 0 or min(graph.degrees) == 0:
                out.append(BoundReport.inapplicable(bound_id, "minimum degree is 0"))
                continue
            out.append(BoundReport.of(bound_id, lam, math.sqrt(2.0 * m - n + 1.0)))
    return out


# -- edge-sum inequalities -------------------------------------------------


def sum_inequalities(graph: WeightedGraph, inputs: Optional[BoundInputs] = None) -> list[BoundReport]:
    """SUM_CL_MINOR: n/2 <= sum_e 1/(cl(e)-1);
    SUM_CL: (n - c(G))/2 <= sum_e 1/cl(e);
    BRADAC: sum_e cl(e)/(cl(e)-1) <= n^2/2.  All weight-independent."""
    ctx = _inputs(graph, inputs)
    prof = ctx.profile
    n = graph.n
    out = []
    degenerate = (None if n >= 2 and all(d > 0 for d in graph.degrees)
                  else "requires n >= 2 and no isolated vertices")
    if degenerate:
        out.append(BoundReport.inapplicable(BoundId.SUM_CL_MINOR, degenerate))
        out.append(BoundReport.inapplicable(BoundId.SUM_CL, degenerate))
    else:
        minor = kahan_sum(1.0 / (cl - 1) for _, _, cl in prof.cl_e)
        out.append(BoundReport.of(BoundId.SUM_CL_MINOR, n / 2.0, minor))
        plain = kahan_sum(1.0 / cl for _, _, cl in prof.cl_e)
        c = len(connected_components(graph))
        out.append(BoundReport.of(BoundId.SUM_CL, (n - c) / 2.0, plain))
    bradac = kahan_sum(cl / (cl - 1) for _, _, cl in prof.cl_e)
    out.append(BoundReport.of(BoundId.BRADAC, bradac, n * n / 2.0))
    return out


def turan_degree_report(graph: WeightedGraph, inputs: Optional[BoundInputs] = None) -> BoundReport:
    """sum_v d(v)(cl(v)-1)/cl(v) <= (sum_v (cl(v)-1)/cl(v))^2."""
    bad = _require_unit(graph, BoundId.TURAN_DEGREE)
    if bad:
        return bad
    ctx = _inputs(graph, inputs)
    cl_v = ctx.profile.cl_v
    lhs = kahan_sum(d * (cl - 1) / cl for d, cl in zip(graph.degrees, cl_v))
    s = kahan_sum((cl - 1) / cl for cl in cl_v)
    return BoundReport.of(BoundId.TURAN_DEGREE, lhs, s * s)


def adak_chandran_report(graph: WeightedGraph, inputs: Optional[BoundInputs] = None) -> BoundReport:
    """m <= (n/2) sum_v (cl(v)-1)/cl(v)."""
    bad = _require_unit(graph, BoundId.ADAK_CHANDRAN)
    if bad:
        return bad
    ctx = _inputs(graph, inputs)
    s = kahan_sum((cl - 1) / cl for cl in ctx.profile.cl_v)
    return BoundReport.of(BoundId.ADAK_CHANDRAN, float(graph.m), graph.n / 2.0 * s)


# -- chromatic lower bounds ------------------------------------------------


def chromatic_lower_bounds(graph: WeightedGraph, chi: Optional[int] = None,
                           inputs: Optional[BoundInputs] = None) -> list[BoundReport]:
    """EDWARDS_ELPHICK_W: chi >= 1 + lambda^2/(||A||_F^2 - lambda^2);
    CVETKOVIC_W (needs 2 sum w(e) >= ||A||_F^2): chi >= 1 + lambda/(n - lambda).

    When ``chi`` is known the reports carry slack = chi - bound; otherwise the
    comparison is omitted (rhs/slack/equality are None).
    """
    ctx = _inputs(graph, inputs)
    if chi is None:
        chi = ctx.chi()
    target = float(chi) if chi is not None else None
    out = []
    lam = ctx.lam
    fro2 = ctx.summary.frobenius_norm ** 2
    if fro2 - lam * lam <= 0.0:
        out.append(BoundReport.inapplicable(
            BoundId.EDWARDS_ELPHICK_W, "||A||_F^2 - lambda^2 is not positive (no edges)"))
    else:
        value = 1.0 + lam * lam / (fro2 - lam * lam)
        out.append(BoundReport.against_optional(BoundId.EDWARDS_ELPHICK_W, value, target))
    if graph.n == 0:
        out.append(BoundReport.inapplicable(BoundId.CVETKOVIC_W, "empty vertex set"))
        return out
    weight_sum = 2.0 * kahan_sum(w for _, _, w in graph.edges)
    if weight_sum < fro2:
        out.append(BoundReport.inapplicable(
            BoundId.CVETKOVIC_W,
            f"precondition 2*sum w(e) >= ||A||_F^2 fails ({weight_sum:.6g} < {fro2:.6g})"))
    elif graph.n - lam <= 0.0:
        out.append(BoundReport.inapplicable(BoundId.CVETKOVIC_W, "spectral radius reaches n"))
    else:
        value = 1.0 + lam / (graph.n - lam)
        out.append(BoundReport.against_optional(BoundId.CVETKOVIC_W, value, target))
    return out


# -- degree-only inequality and Property P ---------------------------------


def psi_report(graph: WeightedGraph, inputs: Optional[BoundInputs] = None) -> BoundReport:
    """2m <= (n - S)(n + 1 - S) with S = sum_v 1/(d(v)+1)."""
    bad = _require_unit(graph, BoundId.PSI)
    if bad:
        return bad
    s = kahan_sum(1.0 / (d + 1) for d in graph.degrees)
    n = graph.n
    return BoundReport.of(BoundId.PSI, 2.0 * graph.m, (n - s) * (n + 1 - s))


def property_p_check(graph: WeightedGraph) -> bool:
    """True iff every vertex of every maximal clique has a neighbor outside it."""
    masks = graph.neighbor_masks
    for clique in maximal_cliques(graph):
        smask = 0
        for v in clique:
            smask |= 1 << v
        for v in clique:
            if masks[v] & ~smask == 0:
                return False
    return True


# -- driver ------------------------------------------------------------------


def compute_all_bounds(graph: WeightedGraph, checks: Optional[Iterable[BoundId]] = None,
                       chi: Optional[int] = None,
                       inputs: Optional[BoundInputs] = None) -> list[BoundReport]:
    """All requested reports in catalog order (default: the whole catalog)."""
    ctx = _inputs(graph, inputs)
    wanted = set(BoundId) if checks is None else {BoundId(c) for c in checks}
    out: list[BoundReport] = []
    if BoundId.MAIN_WEIGHTED in wanted:
        out.append(bound_main_weighted(graph, ctx))
    if BoundId.LOCAL_EDGE in wanted:
        out.append(bound_local_edge(graph, ctx))
    if BoundId.VERTEX_DEGREE in wanted:
        out.append(bound_vertex_degree(graph, ctx))
    if BoundId.LOCALIZED_WILF in wanted:
        out.append(bound_localized_wilf(graph, ctx))
    classics = {BoundId.NIKIFOROV, BoundId.WILF_EDGE, BoundId.STANLEY, BoundId.HONG}
    if wanted & classics:
        out.extend(r for r in bound_classics(graph, ctx) if r.bound_id in wanted)
    sums = {BoundId.SUM_CL_MINOR, BoundId.SUM_CL, BoundId.BRADAC}
    if wanted & sums:
        out.extend(r for r in sum_inequalities(graph, ctx) if r.bound_id in wanted)
    if BoundId.TURAN_DEGREE in wanted:
        out.append(turan_degree_report(graph, ctx))
    if BoundId.ADAK_CHANDRAN in wanted:
        out.append(adak_chandran_report(graph, ctx))
    chromatic = {BoundId.EDWARDS_ELPHICK_W, BoundId.CVETKOVIC_W}
    if wanted & chromatic:
        out.extend(r for r in chromatic_lower_bounds(graph, chi, ctx) if r.bound_id in wanted)
    if BoundId.PSI in wanted:
        out.append(psi_report(graph, ctx))
    return out
