# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twins of the numeric hot loops (see _kernels_py for contracts).

Plain C loops, no -ffast-math: results must stay IEEE-754 faithful so the
two backends agree to rounding error.
"""

from libc.math cimport fabs, sqrt

import numpy as np


def jacobi_eigh(double[:, ::1] a, double tol, int max_sweeps):
    cdef Py_ssize_t n = a.shape[0]
    v_arr = np.eye(n)
    cdef double[:, ::1] v = v_arr
    cdef double fro2 = 0.0, off2, thr2, lim
    cdef double apq, num, den, tau, t, c, s, akp, akq
    cdef Py_ssize_t p, q, k, sweep
    for p in range(n):
        for q in range(n):
            fro2 += a[p, q] * a[p, q]
    lim = sqrt(fro2)
    if lim < 1.0:
        lim = 1.0
    lim *= tol
    thr2 = lim * lim
    for sweep in range(max_sweeps + 1):
        off2 = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off2 += a[p, q] * a[p, q]
        if off2 <= thr2:
            return _diag(a, n), v_arr, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                num = a[q, q] - a[p, p]
                den = 2.0 * apq
                if fabs(num) > 1e153 * fabs(den):
                    t = den / (2.0 * num)  # asymptotic 1/(2 tau); avoids overflow
                else:
                    tau = num / den
                    if tau >= 0.0:
                        t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    akp = a[p, k]
                    akq = a[q, k]
                    a[p, k] = c * akp - s * akq
                    a[q, k] = s * akp + c * akq
                for k in range(n):
                    akp = v[k, p]
                    akq = v[k, q]
                    v[k, p] = c * akp - s * akq
                    v[k, q] = s * akp + c * akq
    return _diag(a, n), v_arr, -1


cdef _diag(double[:, ::1] a, Py_ssize_t n):
    out = np.empty(n)
    cdef double[::1] o = out
    cdef Py_ssize_t i
    for i in range(n):
        o[i] = a[i, i]
    return out


def replicator(double[:, ::1] m, double[:, ::1] xin, double tol, long max_iter):
    cdef Py_ssize_t r = xin.shape[0], n = xin.shape[1]
    x_arr = np.array(xin, dtype=float)
    y_arr = np.empty(n)
    vals_arr = np.empty(r)
    prev_arr = np.empty(r)
    active_arr = np.ones(r, dtype=np.uint8)
    cdef double[:, ::1] x = x_arr
    cdef double[::1] y = y_arr
    cdef double[::1] vals = vals_arr
    cdef double[::1] prev = prev_arr
    cdef unsigned char[::1] active = active_arr
    cdef double min_gain = 0.0, delta, acc, val, rowsum, xn, diff, g
    cdef Py_ssize_t i, j, k
    cdef long it = 0, remaining = r
    for i in range(r):
        val = 0.0
        for j in range(n):
            acc = 0.0
            for k in range(n):
                acc += x[i, k] * m[k, j]
            val += x[i, j] * acc
        prev[i] = val
    if remaining == 0:
        return x_arr, vals_arr, 0, min_gain
    for it in range(1, max_iter + 1):
        for i in range(r):
            if not active[i]:
                continue
            val = 0.0
            for j in range(n):
                acc = 0.0
                for k in range(n):
                    acc += x[i, k] * m[k, j]
                y[j] = acc
                val += x[i, j] * acc
            if it > 1:
                g = val - prev[i]
                if g < min_gain:
                    min_gain = g
            prev[i] = val
            if val <= 0.0:
                active[i] = 0
                remaining -= 1
                continue
            delta = 0.0
            rowsum = 0.0
            for j in range(n):
                xn = x[i, j] * y[j] / val
                diff = fabs(xn - x[i, j])
                if diff > delta:
                    delta = diff
                y[j] = xn
                rowsum += xn
            for j in range(n):
                x[i, j] = y[j] / rowsum
            if delta <= tol:
                active[i] = 0
                remaining -= 1
        if remaining == 0:
            break
    for i in range(r):
        val = 0.0
        for j in range(n):
            acc = 0.0
            for k in range(n):
                acc += x[i, k] * m[k, j]
            val += x[i, j] * acc
        vals[i] = val
    return x_arr, vals_arr, it, min_gain
