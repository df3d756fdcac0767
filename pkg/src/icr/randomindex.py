"""Random index RI(n, m): published tables, Monte Carlo estimation and
the linear approximation.

The estimator follows the published procedure: draw the upper triangle
uniformly from the judgment scale with m missing positions, reject
draws whose comparison graph is disconnected, solve the BOUNDED optimal
completion, and average the resulting consistency indices.  Each sample
index owns its own RNG stream derived from (seed, index), so results
are bit-identical across runs and across worker counts.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .completion import FillMethod, SolverConfig, complete
from .errors import (
    InfeasibleMError,
    InsufficientSamplesError,
    InvalidDimensionsError,
    OutOfRangeError,
)
from .graph import build_graph, is_connected, max_missing_for_connectivity
from .matrices import SAATY_SCALE, IncompleteMatrix
from .stats import welch_from_summary, welch_t_test

DEFAULT_SEED = 20210417


class RiSource(Enum):
    PUBLISHED = "published"
    SIMULATED = "simulated"
    APPROXIMATED = "approximated"


# Random index of complete matrices, size 4..10.
RI_COMPLETE = {
    4: 0.884, 5: 1.109, 6: 1.249, 7: 1.341,
    8: 1.404, 9: 1.451, 10: 1.486,
}

# Random index with m missing pairs (1 million samples each in the
# source publication).
RI_INCOMPLETE = {
    (4, 1): 0.583, (4, 2): 0.356, (4, 3): 0.053,
    (5, 1): 0.925, (5, 2): 0.739, (5, 3): 0.557,
    (5, 4): 0.379, (5, 5): 0.212, (5, 6): 0.059,
    (6, 1): 1.128, (6, 2): 1.007, (6, 3): 0.883,
    (6, 4): 0.758, (6, 5): 0.634, (6, 6): 0.510,
    (6, 7): 0.389, (6, 8): 0.271, (6, 9): 0.161,
    (7, 1): 1.256,
    # Larger sizes, published as spot checks of the linear approximation.
    (7, 4): 0.998, (8, 5): 1.088, (9, 6): 1.158, (10, 7): 1.215,
}


@dataclass(frozen=True)
class RiEntry:
    ri: float
    source: RiSource
    samples: int | None = None
    std_error: float | None = None


@dataclass(frozen=True)
class RiValue:
    """Lookup outcome: the value plus where it came from."""

    value: float
    source: RiSource


class RandomIndexTable:
    """Map (n, m) -> RiEntry.  Immutable; extension returns a new table."""

    def __init__(self, entries):
        self._entries = dict(entries)

    @classmethod
    def published(cls):
        entries = {}
        for n, ri in RI_COMPLETE.items():
            entries[(n, 0)] = RiEntry(ri, RiSource.PUBLISHED)
        for (n, m), ri in RI_INCOMPLETE.items():
            entries[(n, m)] = RiEntry(ri, RiSource.PUBLISHED)
        return cls(entries)

    def get(self, n, m):
        return self._entries.get((n, m))

    def items(self):
        return self._entries.items()

    def with_simulated(self, result):
        entries = dict(self._entries)
        entries[(result.n, result.m)] = RiEntry(
            result.ri, RiSource.SIMULATED, result.samples_kept,
            result.std_error)
        return RandomIndexTable(entries)


@dataclass(frozen=True)
class SimulationSpec:
    n: int
    m: int
    target_samples: int
    seed: int = DEFAULT_SEED
    solver: SolverConfig = field(default_factory=SolverConfig)

    def __post_init__(self):
        if not 4 <= self.n <= 15:
            raise InvalidDimensionsError(f"n = {self.n} outside [4, 15]")
        if self.m < 0:
            raise InvalidDimensionsError("m must be non-negative")
        if self.target_samples < 1:
            raise InvalidDimensionsError("target_samples must be >= 1")


@dataclass(frozen=True)
class SimulationResult:
    n: int
    m: int
    seed: int
    ri: float
    std_error: float
    samples_kept: int
    samples_rejected: int
    ci_samples: np.ndarray | None = None


def generate_random_incomplete(n, m, rng):
    """One random incomplete matrix: uniform scale entries, m missing
    above-diagonal pairs chosen without replacement."""
    if not 4 <= n <= 15:
        raise InvalidDimensionsError(f"n = {n} outside [4, 15]")
    slots = n * (n - 1) // 2
    if not 0 <= m <= slots:
        raise InvalidDimensionsError(f"m = {m} outside [0, {slots}]")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    missing_idx = rng.choice(slots, size=m, replace=False) if m else []
    missing = set(pairs[int(k)] for k in missing_idx)
    scale = np.asarray(SAATY_SCALE)
    a = np.ones((n, n))
    for i, j in pairs:
        if (i, j) in missing:
            a[i, j] = np.nan
            a[j, i] = np.nan
        else:
            v = float(scale[int(rng.integers(0, 17))])
            a[i, j] = v
            a[j, i] = 1.0 / v
    a.setflags(write=False)
    return IncompleteMatrix(a, tuple(sorted(missing)))


def _sample_ci(spec, index):
    """CI of draw ``index``, or None if its graph is disconnected."""
    rng = np.random.default_rng([spec.seed, index])
    matrix = generate_random_incomplete(spec.n, spec.m, rng)
    if not is_connected(build_graph(matrix)):
        return None
    return complete(matrix, FillMethod.BOUNDED, spec.solver).ci


def estimate_ri(spec, jobs=1, keep_samples=True):
    """Monte Carlo estimate of RI(n, m) by rejection sampling."""
    if spec.m > max_missing_for_connectivity(spec.n):
        raise InfeasibleMError(
            f"m = {spec.m} > {max_missing_for_connectivity(spec.n)}: no "
            f"connected configuration exists for n = {spec.n}")
    target = spec.target_samples
    kept = []
    rejected = 0
    next_index = 0
    batch = max(256, min(target, 4096))
    pool = ThreadPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        while len(kept) < target:
            indices = range(next_index, next_index + batch)
            next_index += batch
            if pool is None:
                results = [_sample_ci(spec, k) for k in indices]
            else:
                results = list(pool.map(lambda k: _sample_ci(spec, k),
                                        indices))
            for ci in results:
                if ci is None:
                    rejected += 1
                else:
                    kept.append(ci)
                    if len(kept) == target:
                        break
    finally:
        if pool is not None:
            pool.shutdown()
    samples = np.asarray(kept)
    mean = float(samples.sum() / target)
    std = float(samples.std(ddof=1)) if target > 1 else 0.0
    return SimulationResult(
        n=spec.n, m=spec.m, seed=spec.seed,
        ri=mean, std_error=std / math.sqrt(target),
        samples_kept=target, samples_rejected=rejected,
        ci_samples=samples if keep_samples else None)


def approximate_ri(n, m, ri_complete=None):
    """Linear-in-m approximation [1 - 2m/((n-1)(n-2))] * RI(n, 0)."""
    if n < 4:
        raise OutOfRangeError(f"n = {n} < 4")
    if not 0 <= m <= max_missing_for_connectivity(n):
        raise OutOfRangeError(
            f"m = {m} outside [0, {max_missing_for_connectivity(n)}]")
    if ri_complete is None:
        if n not in RI_COMPLETE:
            raise OutOfRangeError(
                f"no published complete-matrix random index for n = {n}")
        ri_complete = RI_COMPLETE[n]
    return (1.0 - 2.0 * m / ((n - 1) * (n - 2))) * ri_complete


def lookup_ri(n, m, table=None):
    """RI(n, m) from the table, falling back to the approximation."""
    if table is None:
        table = RandomIndexTable.published()
    if n < 4:
        raise OutOfRangeError(f"n = {n} < 4")
    if m > max_missing_for_connectivity(n):
        raise OutOfRangeError(
            f"m = {m} exceeds the connectivity bound "
            f"{max_missing_for_connectivity(n)} for n = {n}")
    entry = table.get(n, m)
    if entry is not None:
        return RiValue(entry.ri, entry.source)
    base = table.get(n, 0)
    ri0 = base.ri if base is not None else None
    return RiValue(approximate_ri(n, m, ri0), RiSource.APPROXIMATED)


def compare_configurations(a, b):
    """Welch two-sample t-test between the CI samples of two runs."""
    if a.ci_samples is not None and b.ci_samples is not None:
        return welch_t_test(a.ci_samples.tolist(), b.ci_samples.tolist())
    for r in (a, b):
        if r.samples_kept < 2:
            raise InsufficientSamplesError("need at least 2 samples per side")
    return welch_from_summary(
        a.ri, a.std_error ** 2 * a.samples_kept, a.samples_kept,
        b.ri, b.std_error ** 2 * b.samples_kept, b.samples_kept)
