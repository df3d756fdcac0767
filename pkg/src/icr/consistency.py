"""Consistency-ratio verdicts for complete and incomplete matrices.

CR = CI / RI(n, m); the matrix is acceptable when CR stays at or below
the 10% threshold.  The thresholds were generated under the BOUNDED
completion regime, so other regimes require an explicit override.
"""

from dataclasses import dataclass

import numpy as np

from .completion import FillMethod, SolverConfig, complete
from .errors import MethodMismatchError, OutOfRangeError
from .matrices import consistency_index, validate_incomplete
from .randomindex import RandomIndexTable, RiSource, RiValue, lookup_ri

DEFAULT_THRESHOLD = 0.1


@dataclass(frozen=True)
class Verdict:
    ci: float
    ri_used: float
    ri_source: RiSource
    cr: float
    accepted: bool
    threshold: float
    n: int
    m: int


def _verdict(ci, ri, threshold, n, m):
    cr = ci / ri.value if ri.value > 0 else float("inf")
    return Verdict(ci=ci, ri_used=ri.value, ri_source=ri.source, cr=cr,
                   accepted=cr <= threshold, threshold=threshold, n=n, m=m)


def analyze(matrix, method=FillMethod.BOUNDED, table=None,
            threshold=DEFAULT_THRESHOLD, config=SolverConfig(),
            allow_method_mismatch=False, ri_override=None):
    """Optimal completion plus the accept/reject verdict.

    Returns ``(CompletionResult, Verdict)``.  Thresholds other than the
    BOUNDED ones would be compared against a differently distributed CI,
    hence the override guard for the other two regimes.
    """
    if not 0 < threshold <= 1:
        raise OutOfRangeError(f"threshold {threshold} outside (0, 1]")
    if method is not FillMethod.BOUNDED and not allow_method_mismatch:
        raise MethodMismatchError(
            f"random-index thresholds assume the bounded completion; pass "
            f"allow_method_mismatch=True to analyze with {method.value}")
    result = complete(matrix, method, config)
    if ri_override is not None:
        ri = RiValue(float(ri_override), RiSource.SIMULATED)
    else:
        ri = lookup_ri(matrix.n, matrix.m, table)
    return result, _verdict(result.ci, ri, threshold, matrix.n, matrix.m)


def classic_cr(matrix, table=None, threshold=DEFAULT_THRESHOLD,
               config=SolverConfig()):
    """Classical verdict for a complete matrix against RI(n, 0)."""
    if table is None:
        table = RandomIndexTable.published()
    entry = table.get(matrix.n, 0)
    if entry is None:
        raise OutOfRangeError(
            f"no random index for complete matrices of size {matrix.n}")
    ci = consistency_index(matrix, tol=config.eigen_tol,
                           max_iter=config.eigen_max_iter)
    return _verdict(ci, RiValue(entry.ri, entry.source), threshold,
                    matrix.n, 0)


def build_parametric_matrix(alpha, beta):
    """The 4x4 two-parameter instance with missing (1,3) and (2,4)
    (1-based), used for the threshold illustration grid."""
    return validate_incomplete([
        [1.0, alpha, None, beta],
        [1.0 / alpha, 1.0, alpha, None],
        [None, 1.0 / alpha, 1.0, alpha],
        [1.0 / beta, None, 1.0 / alpha, 1.0],
    ])


def parametric_table(alpha_values, beta_values, config=SolverConfig()):
    """CI of the parametric instance on a (beta x alpha) grid."""
    grid = np.empty((len(beta_values), len(alpha_values)))
    for r, beta in enumerate(beta_values):
        for c, alpha in enumerate(alpha_values):
            matrix = build_parametric_matrix(alpha, beta)
            grid[r, c] = complete(matrix, FillMethod.BOUNDED, config).ci
    return grid


def classify_parametric_ci(ci, table=None, threshold=DEFAULT_THRESHOLD):
    """Acceptance class of a parametric-grid CI value.

    'accepted'      CI / RI(4, 2) within the threshold;
    'classic_only'  only CI / RI(4, 0) within it;
    'rejected'      neither.
    """
    if table is None:
        table = RandomIndexTable.published()
    ri_incomplete = table.get(4, 2).ri
    ri_complete = table.get(4, 0).ri
    if ci <= threshold * ri_incomplete:
        return "accepted"
    if ci <= threshold * ri_complete:
        return "classic_only"
    return "rejected"
