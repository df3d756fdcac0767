"""Pure-numpy solver kernels.

Fallback implementation of the hot numerical loops; the compiled Cython
module ``icr._ckernels`` exposes the same two functions with identical
semantics.  Backend selection happens in :mod:`icr._backend`.
"""

import math

import numpy as np

BACKEND_NAME = "python"

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def perron_kernel(a, tol, max_iter, w0=None):
    """Power iteration for the dominant eigenpair of a positive matrix.

    Returns ``(lam, w, iterations, residual, converged)`` where ``w`` sums
    to 1 and ``residual`` is the max-norm eigen residual relative to
    ``lam`` at the accepting iteration.
    """
    n = a.shape[0]
    if w0 is None:
        w = np.full(n, 1.0 / n)
    else:
        w = np.asarray(w0, dtype=float)
        w = w / w.sum()
    lam = 0.0
    res = math.inf
    for it in range(1, max_iter + 1):
        u = a @ w
        lam = float(u.sum())
        res = float(np.max(np.abs(u - lam * w))) / lam
        w = u / lam
        if res <= tol:
            return lam, w, it, res, True
    return lam, w, max_iter, res, False


def _line_search(a, i, j, w, log_lo, log_hi, ls_tol, eigen_tol, eigen_max_iter):
    """Golden-section minimisation of lambda_max over log a[i, j]."""

    def f(t):
        a[i, j] = math.exp(t)
        a[j, i] = math.exp(-t)
        lam, w_new, _, _, ok = perron_kernel(a, eigen_tol, eigen_max_iter, w)
        w[:] = w_new
        return lam, ok

    ok_all = True
    lo, hi = log_lo, log_hi
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc, ok = f(c)
    ok_all &= ok
    fd, ok = f(d)
    ok_all &= ok
    while hi - lo > ls_tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - _INVPHI * (hi - lo)
            fc, ok = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INVPHI * (hi - lo)
            fd, ok = f(d)
        ok_all &= ok
    t = 0.5 * (lo + hi)
    # Boundary optima: the bracket converges next to the box edge, so the
    # midpoint would sit ls_tol/2 inside it.  Snap onto the edge.
    if t > log_hi - ls_tol:
        t = log_hi
    elif t < log_lo + ls_tol:
        t = log_lo
    return t, ok_all


def completion_kernel(a, pos_i, pos_j, x, log_lo, log_hi,
                      eigen_tol, eigen_max_iter, line_search_tol,
                      coordinate_tol, max_sweeps, polish):
    """Cyclic coordinate descent on the missing entries of ``a``.

    ``a`` must arrive with the missing cells already set from ``x`` (and
    reciprocals).  Both ``a`` and ``x`` are updated in place.  Returns
    ``(lam, w, sweeps, converged)``.
    """
    m = len(pos_i)
    n = a.shape[0]
    w = np.full(n, 1.0 / n)
    lam, w, _, _, eig_ok = perron_kernel(a, eigen_tol, eigen_max_iter, w)
    sweeps = 0
    swept_ok = m == 0
    for sweeps in range(1, max_sweeps + 1):
        lam_prev = lam
        for k in range(m):
            i, j = pos_i[k], pos_j[k]
            t, ok = _line_search(a, i, j, w, log_lo, log_hi,
                                 line_search_tol, eigen_tol, eigen_max_iter)
            eig_ok &= ok
            x[k] = math.exp(t)
            a[i, j] = x[k]
            a[j, i] = 1.0 / x[k]
            lam, w, _, _, ok = perron_kernel(a, eigen_tol, eigen_max_iter, w)
            eig_ok &= ok
        if lam_prev - lam <= coordinate_tol * lam_prev:
            swept_ok = True
            break
    if polish and m > 0:
        _polish(a, pos_i, pos_j, x, log_lo, log_hi,
                eigen_tol, eigen_max_iter, w)
        lam, w, _, _, ok = perron_kernel(a, eigen_tol, eigen_max_iter, w)
        eig_ok &= ok
    return lam, w, sweeps, bool(swept_ok and eig_ok)


def _polish(a, pos_i, pos_j, x, log_lo, log_hi, eigen_tol, eigen_max_iter, w):
    """Eigenvector-ratio fixed point; sharpens interior optima.

    Only valid when no bound is active at the optimum (the unbounded
    method), hence guarded: any step that increases lambda_max is undone
    and iteration stops.
    """
    m = len(pos_i)
    lo, hi = math.exp(log_lo), math.exp(log_hi)
    lam, w_cur, _, _, _ = perron_kernel(a, eigen_tol, eigen_max_iter, w)
    best_lam = lam
    best_x = x.copy()
    for _ in range(200):
        moved = 0.0
        for k in range(m):
            i, j = pos_i[k], pos_j[k]
            v = min(max(w_cur[i] / w_cur[j], lo), hi)
            moved = max(moved, abs(math.log(v / x[k])))
            x[k] = v
            a[i, j] = v
            a[j, i] = 1.0 / v
        lam, w_cur, _, _, _ = perron_kernel(a, eigen_tol, eigen_max_iter, w_cur)
        if lam > best_lam * (1.0 + 1e-12):
            x[:] = best_x
            for k in range(m):
                a[pos_i[k], pos_j[k]] = x[k]
                a[pos_j[k], pos_i[k]] = 1.0 / x[k]
            break
        if lam < best_lam:
            best_lam = lam
            best_x[:] = x
        if moved < 1e-13:
            break
    w[:] = w_cur
