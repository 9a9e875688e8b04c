"""NumPy fallback for the numeric hot loops.

Interface-identical to the compiled module ``turanlocal._kernels``; the
backend module picks whichever is available.  Both implementations perform
the same IEEE-754 operations in the same order per rotation/iteration, so
they agree to rounding error (reductions may differ in the last bits).
"""

from __future__ import annotations

import math

import numpy as np


def jacobi_eigh(a: np.ndarray, tol: float, max_sweeps: int):
    """Cyclic Jacobi diagonalization of a symmetric matrix (in place).

    Returns (eigenvalues, eigenvector columns, sweeps); sweeps == -1 means
    the off-diagonal mass did not fall below tol * max(1, ||A||_F) within
    ``max_sweeps`` sweeps.
    """
    n = a.shape[0]
    v = np.eye(n)
    fro = math.sqrt(float((a * a).sum()))
    lim = tol * (fro if fro > 1.0 else 1.0)
    thr2 = lim * lim
    for sweep in range(max_sweeps + 1):
        sq = a * a
        np.fill_diagonal(sq, 0.0)  # direct off-diagonal mass: no cancellation
        off2 = float(sq.sum())
        if off2 <= thr2:
            return np.diagonal(a).copy(), v, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                num = a[q, q] - a[p, p]
                den = 2.0 * apq
                if abs(num) > 1e153 * abs(den):
                    t = den / (2.0 * num)  # asymptotic 1/(2 tau); avoids overflow
                else:
                    tau = num / den
                    if tau >= 0.0:
                        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    return np.diagonal(a).copy(), v, -1


def replicator(m: np.ndarray, x: np.ndarray, tol: float, max_iter: int):
    """Batch replicator dynamics x_i <- x_i (Mx)_i / (x^T M x), row-wise.

    ``m`` must be entrywise nonnegative with zero diagonal; each row of ``x``
    is a simplex point.  Rows are independent runs: a row freezes once its
    own max entry change is <= tol (or its form value hits 0); iteration
    stops when every row is frozen or after ``max_iter`` iterations.
    Returns (x, values, iterations, min_gain) where min_gain is the most
    negative between-iteration value change observed across live rows
    (>= -eps for a correct run: the dynamics ascend the form).
    """
    x = np.array(x, dtype=float)
    r = x.shape[0]
    prev = np.einsum("ij,ij->i", x, x @ m)
    active = np.ones(r, dtype=bool)
    min_gain = 0.0
    iters = 0
    for iters in range(1, max_iter + 1):
        idx = np.nonzero(active)[0]
        if idx.size == 0:
            iters -= 1
            break
        xa = x[idx]
        y = xa @ m
        vals = np.einsum("ij,ij->i", xa, y)
        if iters > 1:
            g = float((vals - prev[idx]).min())
            if g < min_gain:
                min_gain = g
        prev[idx] = vals
        live = vals > 0.0
        xn = xa.copy()
        xn[live] = xa[live] * y[live] / vals[live, None]
        deltas = np.abs(xn - xa).max(axis=1)
        xn[live] /= xn[live].sum(axis=1, keepdims=True)
        x[idx] = xn
        frozen = (deltas <= tol) | ~live
        active[idx[frozen]] = False
        if not active.any():
            break
    final = np.einsum("ij,ij->i", x, x @ m)
    return x, final, iters, min_gain
