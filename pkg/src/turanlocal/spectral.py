"""Dense symmetric eigendecomposition and spectral-radius queries.

Cyclic Jacobi is used rather than power iteration because the quantity of
interest is max |eigenvalue| of possibly negative-weighted matrices, where
power iteration can stall between a +/- lambda pair.  Tolerances are fixed
module constants, not per-call knobs, so reports are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import backend
from .graphs import WeightedGraph
from .jsonio import dumps as _dumps

SWEEP_TOL = 1e-13          # off-diagonal mass target, relative to max(1, ||A||_F)
MAX_SWEEPS = 100
SYMMETRY_RTOL = 1e-12
TRACE_RTOL = 1e-9          # Frobenius/eigenvalue consistency guard


class EigenError(RuntimeError):
    """Eigensolver failure (non-convergence or a broken internal identity)."""


@dataclass(frozen=True)
class SpectrumSummary:
    eigenvalues: tuple[float, ...]          # sorted descending
    spectral_radius: float
    principal_vector: tuple[float, ...]     # unit; attains max |eigenvalue|
    frobenius_norm: float

    def to_json(self) -> str:
        return _dumps({
            "eigenvalues": list(self.eigenvalues),
            "lambda": self.spectral_radius,
            "frobenius": self.frobenius_norm,
        })


def eigen_sym(matrix: Sequence[Sequence[float]] | np.ndarray) -> SpectrumSummary:
    """Full spectrum of a symmetric real matrix by cyclic Jacobi rotations.

    Raises ValueError for non-square/non-finite/asymmetric input and
    EigenError if 100 sweeps do not converge (never returns silently).
    """
    m = np.array(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    n = m.shape[0]
    if n == 0:
        return SpectrumSummary((), 0.0, (), 0.0)
    if not np.isfinite(m).all():
        raise ValueError("matrix contains non-finite entries")
    fro = math.sqrt(float((m * m).sum()))
    asym = float(np.abs(m - m.T).max())
    if asym > SYMMETRY_RTOL * max(1.0, fro):
        raise ValueError(f"matrix is not symmetric: max |A - A^T| = {asym:.3e}")
    work = (m + m.T) / 2.0
    vals, vecs, sweeps = backend.jacobi_eigh(work, SWEEP_TOL, MAX_SWEEPS)
    if sweeps < 0:
        raise EigenError(f"Jacobi did not converge within {MAX_SWEEPS} sweeps")
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    # trace identity: sum of squared eigenvalues must reproduce ||A||_F^2
    drift = abs(float((vals * vals).sum()) - fro * fro)
    if drift > TRACE_RTOL * max(1.0, fro * fro):
        raise EigenError(f"Frobenius/trace identity broken by {drift:.3e}")
    radius = float(np.abs(vals).max())
    idx = int(np.argmax(np.abs(vals)))  # first maximal: prefers +lambda over -lambda
    vec = vecs[:, idx].copy()
    j = int(np.argmax(np.abs(vec)))
    if vec[j] < 0.0:
        vec = -vec
    return SpectrumSummary(tuple(float(x) for x in vals), radius,
                           tuple(float(x) for x in vec), fro)


def spectrum(graph: WeightedGraph) -> SpectrumSummary:
    if graph.n == 0:
        return SpectrumSummary((), 0.0, (), 0.0)
    return eigen_sym(graph.adjacency)


def spectral_radius(graph: WeightedGraph) -> float:
    return spectrum(graph).spectral_radius


def perron_vector(matrix: np.ndarray, tol: float = 1e-13, max_iter: int = 200000) -> np.ndarray:
    """Entrywise-nonnegative unit eigenvector for the top eigenvalue of a
    nonnegative symmetric matrix.

    Power iteration on A + ||A||_F I starting from the all-ones vector: the
    shift keeps iterates nonnegative and breaks the +/- lambda oscillation of
    bipartite spectra while preserving the Perron eigenvector.
    """
    a = np.asarray(matrix, dtype=float)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    if float(a.min()) < 0.0:
        raise ValueError("perron_vector requires a nonnegative matrix")
    fro = math.sqrt(float((a * a).sum()))
    if fro == 0.0:
        return np.full(n, 1.0 / math.sqrt(n))
    x = np.full(n, 1.0 / math.sqrt(n))
    limit = tol * max(1.0, fro)
    for _ in range(max_iter):
        y = a @ x + fro * x
        norm = math.sqrt(float(y @ y))
        x = y / norm
        ax = a @ x
        rho = float(x @ ax)
        if math.sqrt(float(((ax - rho * x) ** 2).sum())) <= limit:
            return x
    raise EigenError("power iteration did not converge")
