"""Eigenvalue-minimal completion of incomplete comparison matrices.

Three filling regimes: UNBOUNDED (any positive fill), BOUNDED (fills
restricted to [1/9, 9]) and DISCRETE (fills restricted to the 17-element
judgment scale).  The continuous regimes run cyclic coordinate descent
with a golden-section line search per coordinate in log space, where the
objective is strictly quasiconvex for connected instances; the discrete
regime is solved exactly by enumeration for small m and by a
round-then-improve local search otherwise.
"""

import itertools
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._backend import completion_kernel, perron_kernel
from .errors import (
    DisconnectedGraphError,
    EntryMismatchError,
    NoConvergenceError,
    NotSpanningTreeError,
)
from .graph import build_graph, is_connected, is_spanning_tree
from .matrices import (
    SAATY_MAX,
    SAATY_MIN,
    SAATY_SCALE,
    CompleteMatrix,
    perron,
)

DISCRETE_EXHAUSTIVE_MAX_M = 4


class FillMethod(Enum):
    UNBOUNDED = "unbounded"
    BOUNDED = "bounded"
    DISCRETE = "discrete"


@dataclass(frozen=True)
class SolverConfig:
    eigen_tol: float = 1e-10
    eigen_max_iter: int = 10000
    coordinate_tol: float = 1e-9       # relative lambda decrease per sweep
    line_search_tol: float = 1e-7      # width of the log-x bracket
    max_sweeps: int = 200
    unbounded_box: tuple = (1e-8, 1e8)

    def __post_init__(self):
        if min(self.eigen_tol, self.coordinate_tol, self.line_search_tol) <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_sweeps < 1:
            raise ValueError("max_sweeps must be >= 1")


@dataclass(frozen=True)
class CompletionResult:
    filled: CompleteMatrix
    lambda_max: float
    ci: float
    fills: tuple          # of ((i, j), value)
    sweeps_used: int
    converged: bool
    method: FillMethod

    @property
    def weights(self):
        return perron(self.filled).weights


def _result(matrix, x, lam, sweeps, converged, method):
    filled = np.array(matrix.values)
    for k, (i, j) in enumerate(matrix.missing_pairs):
        filled[i, j] = x[k]
        filled[j, i] = 1.0 / x[k]
    filled.setflags(write=False)
    n = matrix.n
    ci = max((lam - n) / (n - 1), 0.0)
    fills = tuple((pos, float(v)) for pos, v in zip(matrix.missing_pairs, x))
    return CompletionResult(CompleteMatrix(filled), float(lam), ci, fills,
                            sweeps, converged, method)


def _positions(matrix):
    pos = np.asarray(matrix.missing_pairs, dtype=np.int64).reshape(-1, 2)
    return (np.ascontiguousarray(pos[:, 0]),
            np.ascontiguousarray(pos[:, 1]))


def _working_copy(matrix, x):
    a = np.array(matrix.values)
    for k, (i, j) in enumerate(matrix.missing_pairs):
        a[i, j] = x[k]
        a[j, i] = 1.0 / x[k]
    return np.ascontiguousarray(a)


def _solve_box(matrix, lo, hi, config, polish):
    pos_i, pos_j = _positions(matrix)
    x = np.ones(matrix.m)
    a = _working_copy(matrix, x)
    lam, _, sweeps, converged = completion_kernel(
        a, pos_i, pos_j, x, math.log(lo), math.log(hi),
        config.eigen_tol, config.eigen_max_iter,
        config.line_search_tol, config.coordinate_tol,
        config.max_sweeps, polish)
    return lam, x, sweeps, converged


def _lambda_for_fill(matrix, x, config):
    a = _working_copy(matrix, x)
    lam, _, _, res, ok = perron_kernel(a, config.eigen_tol,
                                       config.eigen_max_iter, None)
    if not ok:
        raise NoConvergenceError(config.eigen_max_iter, res)
    return lam


def _solve_discrete(matrix, config):
    m = matrix.m
    scale = np.asarray(SAATY_SCALE)
    if m <= DISCRETE_EXHAUSTIVE_MAX_M:
        best_lam, best_x = math.inf, None
        for combo in itertools.product(range(17), repeat=m):
            x = scale[list(combo)]
            lam = _lambda_for_fill(matrix, x, config)
            if lam < best_lam * (1.0 - 1e-12):
                best_lam, best_x = lam, x
        return best_lam, best_x, 1, True

    # Too many combinations: round the bounded optimum to the scale in
    # log distance, then improve one coordinate at a time over adjacent
    # scale elements.  The result is a local optimum only.
    _, x_cont, sweeps, converged = _solve_box(
        matrix, SAATY_MIN, SAATY_MAX, config, polish=False)
    log_scale = np.log(scale)
    idx = [int(np.argmin(np.abs(log_scale - math.log(v)))) for v in x_cont]
    x = scale[idx]
    lam = _lambda_for_fill(matrix, x, config)
    improved = True
    while improved:
        improved = False
        for k in range(m):
            for step in (-1, 1):
                cand = idx[k] + step
                if not 0 <= cand < 17:
                    continue
                trial = x.copy()
                trial[k] = scale[cand]
                trial_lam = _lambda_for_fill(matrix, trial, config)
                if trial_lam < lam * (1.0 - 1e-12):
                    lam, x, idx[k] = trial_lam, trial, cand
                    improved = True
    return lam, x, sweeps, converged


def complete(matrix, method=FillMethod.BOUNDED, config=SolverConfig()):
    """Optimal completion of ``matrix`` under the given filling regime.

    Requires a connected comparison graph.  With no missing entries the
    matrix's own eigendata is returned.  The returned optima obey
    UNBOUNDED <= BOUNDED <= DISCRETE.
    """
    graph = build_graph(matrix)
    if not is_connected(graph):
        raise DisconnectedGraphError(
            "comparison graph is disconnected; the completion problem has "
            "no unique solution")
    if matrix.m == 0:
        lam = perron(matrix.as_complete(), tol=config.eigen_tol,
                     max_iter=config.eigen_max_iter).lambda_max
        return _result(matrix, np.empty(0), lam, 0, True, method)

    if method is FillMethod.UNBOUNDED:
        lo, hi = config.unbounded_box
        lam, x, sweeps, converged = _solve_box(matrix, lo, hi, config,
                                               polish=True)
    elif method is FillMethod.BOUNDED:
        lam, x, sweeps, converged = _solve_box(matrix, SAATY_MIN, SAATY_MAX,
                                               config, polish=False)
    elif method is FillMethod.DISCRETE:
        lam, x, sweeps, converged = _solve_discrete(matrix, config)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _result(matrix, x, lam, sweeps, converged, method)


def spanning_tree_fill(matrix):
    """The unique consistent completion of a spanning-tree instance.

    Each missing entry is the product of known entries along the tree
    path between its endpoints; known entries are kept bit-identical.
    """
    graph = build_graph(matrix)
    if not is_spanning_tree(graph):
        raise NotSpanningTreeError(
            "consistent path-product completion requires a spanning tree")
    a = matrix.values
    n = matrix.n
    # Log-potential per vertex: p[i] - p[j] = log a[i, j] along tree edges.
    adj = graph.adjacency()
    p = np.zeros(n)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        v = stack.pop()
        for nb in adj[v]:
            if not seen[nb]:
                seen[nb] = True
                p[nb] = p[v] - math.log(a[v, nb])
                stack.append(nb)
    filled = np.array(a)
    for i, j in matrix.missing_pairs:
        filled[i, j] = math.exp(p[i] - p[j])
        filled[j, i] = 1.0 / filled[i, j]
    filled.setflags(write=False)
    return CompleteMatrix(filled)


def best_completion_bound(matrix, candidate, config=SolverConfig(),
                          slack=1e-8):
    """True iff the optimal completion beats ``candidate``.

    ``candidate`` must agree with the known entries.  When all its fills
    lie inside [1/9, 9] the BOUNDED optimum applies; otherwise the
    UNBOUNDED one (a lower bound in either case).
    """
    known = ~np.isnan(matrix.values)
    for i in range(matrix.n):
        for j in range(matrix.n):
            if known[i, j] and not np.isclose(candidate.values[i, j],
                                              matrix.values[i, j],
                                              rtol=1e-9, atol=0.0):
                raise EntryMismatchError(i, j)
    in_box = all(SAATY_MIN - 1e-12 <= candidate.values[i, j] <= SAATY_MAX + 1e-12
                 for i, j in matrix.missing_pairs)
    method = FillMethod.BOUNDED if in_box else FillMethod.UNBOUNDED
    opt = complete(matrix, method, config)
    cand_lam = perron(candidate, tol=config.eigen_tol,
                      max_iter=config.eigen_max_iter).lambda_max
    return opt.lambda_max <= cand_lam + slack
