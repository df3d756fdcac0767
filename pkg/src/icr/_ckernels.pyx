# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled solver kernels.

Same contract as :mod:`icr._pykernels`; see that module for the
documented semantics.  The heavy loops run without the GIL so simulation
workers can be plain threads.
"""

from libc.math cimport exp, fabs, log, sqrt

import numpy as np

BACKEND_NAME = "cython"

cdef double INVPHI = (sqrt(5.0) - 1.0) / 2.0


cdef double _perron(double[:, ::1] a, double[::1] w, double[::1] u,
                    double tol, int max_iter,
                    int* iters_out, double* res_out, bint* ok_out) nogil:
    cdef int n = a.shape[0]
    cdef int i, j, it
    cdef double lam = 0.0, res, s, d
    for it in range(1, max_iter + 1):
        for i in range(n):
            s = 0.0
            for j in range(n):
                s += a[i, j] * w[j]
            u[i] = s
        lam = 0.0
        for i in range(n):
            lam += u[i]
        res = 0.0
        for i in range(n):
            d = fabs(u[i] - lam * w[i])
            if d > res:
                res = d
        res /= lam
        for i in range(n):
            w[i] = u[i] / lam
        if res <= tol:
            iters_out[0] = it
            res_out[0] = res
            ok_out[0] = True
            return lam
    iters_out[0] = max_iter
    res_out[0] = res
    ok_out[0] = False
    return lam


def perron_kernel(double[:, ::1] a, double tol, int max_iter, w0=None):
    cdef int n = a.shape[0]
    w_arr = np.full(n, 1.0 / n) if w0 is None else np.asarray(w0, dtype=float) / np.sum(w0)
    u_arr = np.empty(n)
    cdef double[::1] w = w_arr
    cdef double[::1] u = u_arr
    cdef int iters = 0
    cdef double res = 0.0
    cdef bint ok = False
    cdef double lam
    with nogil:
        lam = _perron(a, w, u, tol, max_iter, &iters, &res, &ok)
    return lam, w_arr, iters, res, bool(ok)


cdef double _line_search(double[:, ::1] a, int i, int j,
                         double[::1] w, double[::1] u,
                         double log_lo, double log_hi,
                         double ls_tol, double eigen_tol, int eigen_max_iter,
                         bint* ok_all) nogil:
    cdef double lo = log_lo, hi = log_hi
    cdef double c, d, fc, fd
    cdef int it_tmp
    cdef double res_tmp
    cdef bint ok

    c = hi - INVPHI * (hi - lo)
    d = lo + INVPHI * (hi - lo)
    a[i, j] = exp(c); a[j, i] = exp(-c)
    fc = _perron(a, w, u, eigen_tol, eigen_max_iter, &it_tmp, &res_tmp, &ok)
    if not ok:
        ok_all[0] = False
    a[i, j] = exp(d); a[j, i] = exp(-d)
    fd = _perron(a, w, u, eigen_tol, eigen_max_iter, &it_tmp, &res_tmp, &ok)
    if not ok:
        ok_all[0] = False
    while hi - lo > ls_tol:
        if fc < fd:
            hi = d; d = c; fd = fc
            c = hi - INVPHI * (hi - lo)
            a[i, j] = exp(c); a[j, i] = exp(-c)
            fc = _perron(a, w, u, eigen_tol, eigen_max_iter, &it_tmp, &res_tmp, &ok)
        else:
            lo = c; c = d; fc = fd
            d = lo + INVPHI * (hi - lo)
            a[i, j] = exp(d); a[j, i] = exp(-d)
            fd = _perron(a, w, u, eigen_tol, eigen_max_iter, &it_tmp, &res_tmp, &ok)
        if not ok:
            ok_all[0] = False
    # Snap boundary optima onto the box edge (the bracket midpoint would
    # otherwise sit ls_tol/2 inside it).
    c = 0.5 * (lo + hi)
    if c > log_hi - ls_tol:
        c = log_hi
    elif c < log_lo + ls_tol:
        c = log_lo
    return c


cdef void _polish(double[:, ::1] a, long[::1] pos_i, long[::1] pos_j,
                  double[::1] x, double[::1] best_x,
                  double log_lo, double log_hi,
                  double eigen_tol, int eigen_max_iter,
                  double[::1] w, double[::1] u) nogil:
    cdef int m = pos_i.shape[0]
    cdef double lo = exp(log_lo), hi = exp(log_hi)
    cdef int k, it_tmp, rounds, i, j
    cdef double res_tmp, v, moved, lam, best_lam
    cdef bint ok
    lam = _perron(a, w, u, eigen_tol, eigen_max_iter, &it_tmp, &res_tmp, &ok)
    best_lam = lam
    for k in range(m):
        best_x[k] = x[k]
    for rounds in range(200):
        moved = 0.0
        for k in range(m):
            i = <int>pos_i[k]; j = <int>pos_j[k]
            v = w[i] / w[j]
            if v < lo:
                v = lo
            elif v > hi:
                v = hi
            if fabs(log(v / x[k])) > moved:
                moved = fabs(log(v / x[k]))
            x[k] = v
            a[i, j] = v
            a[j, i] = 1.0 / v
        lam = _perron(a, w, u, eigen_tol, eigen_max_iter, &it_tmp, &res_tmp, &ok)
        if lam > best_lam * (1.0 + 1e-12):
            for k in range(m):
                x[k] = best_x[k]
                a[<int>pos_i[k], <int>pos_j[k]] = x[k]
                a[<int>pos_j[k], <int>pos_i[k]] = 1.0 / x[k]
            break
        if lam < best_lam:
            best_lam = lam
            for k in range(m):
                best_x[k] = x[k]
        if moved < 1e-13:
            break


def completion_kernel(double[:, ::1] a, long[::1] pos_i, long[::1] pos_j,
                      double[::1] x, double log_lo, double log_hi,
                      double eigen_tol, int eigen_max_iter,
                      double line_search_tol, double coordinate_tol,
                      int max_sweeps, bint polish):
    cdef int m = pos_i.shape[0]
    cdef int n = a.shape[0]
    w_arr = np.full(n, 1.0 / n)
    u_arr = np.empty(n)
    best_arr = np.empty(max(m, 1))
    cdef double[::1] w = w_arr
    cdef double[::1] u = u_arr
    cdef double[::1] best_x = best_arr
    cdef int iters = 0, sweeps = 0, k, i, j
    cdef double res = 0.0, lam, lam_prev, t
    cdef bint ok = True, eig_ok = True, swept_ok = (m == 0)
    with nogil:
        lam = _perron(a, w, u, eigen_tol, eigen_max_iter, &iters, &res, &ok)
        if not ok:
            eig_ok = False
        for sweeps in range(1, max_sweeps + 1):
            lam_prev = lam
            for k in range(m):
                i = <int>pos_i[k]; j = <int>pos_j[k]
                t = _line_search(a, i, j, w, u, log_lo, log_hi,
                                 line_search_tol, eigen_tol, eigen_max_iter,
                                 &eig_ok)
                x[k] = exp(t)
                a[i, j] = x[k]
                a[j, i] = 1.0 / x[k]
                lam = _perron(a, w, u, eigen_tol, eigen_max_iter,
                              &iters, &res, &ok)
                if not ok:
                    eig_ok = False
            if lam_prev - lam <= coordinate_tol * lam_prev:
                swept_ok = True
                break
        if polish and m > 0:
            _polish(a, pos_i, pos_j, x, best_x, log_lo, log_hi,
                    eigen_tol, eigen_max_iter, w, u)
            lam = _perron(a, w, u, eigen_tol, eigen_max_iter,
                          &iters, &res, &ok)
            if not ok:
                eig_ok = False
    return lam, w_arr, sweeps, bool(swept_ok and eig_ok)
