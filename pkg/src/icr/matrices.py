"""Domain types for pairwise comparison matrices and the Perron solver.

Matrices are stored as float64 arrays.  Incomplete matrices mark missing
entries with NaN; the list of missing above-diagonal positions is kept
alongside.  All types are frozen and the wrapped arrays are write-locked,
so every operation here is safe to call concurrently.
"""

from dataclasses import dataclass, field

import numpy as np

from ._backend import perron_kernel
from .errors import (
    AsymmetricMissingError,
    BadDiagonalError,
    InvalidDimensionsError,
    MissingDiagonalError,
    NoConvergenceError,
    NonPositiveEntryError,
    NonSquareError,
    ReciprocityViolationError,
)

# The 17 admissible judgment values: 1/9, 1/8, ..., 1/2, 1, 2, ..., 9.
SAATY_SCALE = tuple(1.0 / k for k in range(9, 1, -1)) + tuple(
    float(k) for k in range(1, 10))
SAATY_MIN = SAATY_SCALE[0]
SAATY_MAX = SAATY_SCALE[-1]

#: Largest supported matrix size; keeps discrete search and simulation
#: runtimes bounded.  Validators accept an override.
MAX_N = 15

RECIPROCITY_TOL = 1e-9


def is_scale_value(value, tol=1e-9):
    """True if ``value`` matches one of the 17 scale elements."""
    return any(abs(value - s) <= tol * s for s in SAATY_SCALE)


def nearest_scale_value(value):
    """Scale element closest to ``value`` in log distance."""
    logs = np.log(SAATY_SCALE)
    return SAATY_SCALE[int(np.argmin(np.abs(logs - np.log(value))))]


def _lock(arr):
    arr = np.ascontiguousarray(arr, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class CompleteMatrix:
    """A fully specified positive reciprocal matrix."""

    values: np.ndarray

    @property
    def n(self):
        return self.values.shape[0]


@dataclass(frozen=True)
class IncompleteMatrix:
    """A reciprocal matrix with NaN-marked missing entry pairs."""

    values: np.ndarray
    missing_pairs: tuple = field(default=())

    @property
    def n(self):
        return self.values.shape[0]

    @property
    def m(self):
        return len(self.missing_pairs)

    @property
    def is_complete(self):
        return self.m == 0

    def as_complete(self):
        if not self.is_complete:
            raise InvalidDimensionsError(
                "matrix still has missing entries")
        return CompleteMatrix(self.values)


@dataclass(frozen=True)
class EigenResult:
    """Perron eigenpair with solver diagnostics."""

    lambda_max: float
    weights: np.ndarray
    iterations: int
    residual: float


def _check_square(raw, min_n, max_n):
    arr = np.asarray(raw, dtype=object)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NonSquareError(f"expected a square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    if n < min_n:
        raise InvalidDimensionsError(
            f"matrix size {n} is below the minimum {min_n}")
    if n > max_n:
        raise InvalidDimensionsError(
            f"matrix size {n} exceeds the cap {max_n}")
    return n


def validate_complete(raw, max_n=MAX_N):
    """Checks positivity, unit diagonal and reciprocity of a raw grid.

    Reciprocity is checked at relative tolerance 1e-9 (so decimal text
    round-trips are accepted) and then the lower triangle is rebuilt as
    exact reciprocals of the upper one.
    """
    n = _check_square(raw, 2, max_n)
    a = np.array(raw, dtype=float)
    if np.isnan(a).any():
        i, j = map(int, np.argwhere(np.isnan(a))[0])
        raise NonPositiveEntryError(i, j, float("nan"))
    for i in range(n):
        for j in range(n):
            if not a[i, j] > 0:
                raise NonPositiveEntryError(i, j, a[i, j])
    for i in range(n):
        if abs(a[i, i] - 1.0) > RECIPROCITY_TOL:
            raise BadDiagonalError(i)
        a[i, i] = 1.0
    for i in range(n):
        for j in range(i + 1, n):
            if abs(a[i, j] * a[j, i] - 1.0) > RECIPROCITY_TOL:
                raise ReciprocityViolationError(i, j)
            a[j, i] = 1.0 / a[i, j]
    return CompleteMatrix(_lock(a))


def validate_incomplete(raw, max_n=MAX_N, missing_marker=None):
    """Validates a raw grid that may contain missing entries.

    Missing entries are NaN, None, or ``missing_marker``.  The fully
    known case (m = 0) is accepted.
    """
    n = _check_square(raw, 3, max_n)
    a = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            v = raw[i][j] if not isinstance(raw, np.ndarray) else raw[i, j]
            if v is None or (missing_marker is not None and v == missing_marker):
                a[i, j] = np.nan
            else:
                a[i, j] = float(v)

    missing = []
    for i in range(n):
        if np.isnan(a[i, i]):
            raise MissingDiagonalError(i)
    for i in range(n):
        for j in range(i + 1, n):
            up, low = np.isnan(a[i, j]), np.isnan(a[j, i])
            if up != low:
                raise AsymmetricMissingError(i, j)
            if up:
                missing.append((i, j))

    known = a.copy()
    fill = ~np.isnan(known)
    check = np.where(fill, known, 1.0)
    for i in range(n):
        for j in range(n):
            if fill[i, j] and not check[i, j] > 0:
                raise NonPositiveEntryError(i, j, a[i, j])
    for i in range(n):
        if abs(a[i, i] - 1.0) > RECIPROCITY_TOL:
            raise BadDiagonalError(i)
        a[i, i] = 1.0
    for i in range(n):
        for j in range(i + 1, n):
            if not np.isnan(a[i, j]):
                if abs(a[i, j] * a[j, i] - 1.0) > RECIPROCITY_TOL:
                    raise ReciprocityViolationError(i, j)
                a[j, i] = 1.0 / a[i, j]
    return IncompleteMatrix(_lock(a), tuple(missing))


def perron(matrix, tol=1e-10, max_iter=10000, w0=None):
    """Dominant eigenpair by power iteration from the uniform vector."""
    a = np.ascontiguousarray(matrix.values if isinstance(matrix, CompleteMatrix)
                             else matrix, dtype=float)
    if not a.flags.writeable:
        a = np.array(a)  # the compiled kernel needs a writable buffer
    lam, w, iters, res, ok = perron_kernel(a, tol, max_iter, w0)
    if not ok:
        raise NoConvergenceError(iters, res)
    return EigenResult(lam, w, iters, res)


def consistency_index(matrix, tol=1e-10, max_iter=10000):
    """(lambda_max - n) / (n - 1); tiny negative round-off is clamped."""
    n = matrix.n
    lam = perron(matrix, tol=tol, max_iter=max_iter).lambda_max
    return max((lam - n) / (n - 1), 0.0)


def is_consistent(matrix, tol=1e-9):
    """Transitivity check a_ij * a_jk == a_ik over all triples."""
    a = matrix.values
    n = matrix.n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if abs(a[i, j] * a[j, k] / a[i, k] - 1.0) > tol:
                    return False
    return True
