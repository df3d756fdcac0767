"""Consistency analysis of incomplete pairwise comparison matrices.

Measures how inconsistent a set of pairwise ratio judgments is when some
comparisons are missing: fills the gaps to minimise the dominant
eigenvalue, normalises the resulting consistency index by a random index
that accounts for the number of missing pairs, and applies the 10%
acceptance rule.
"""

from ._backend import BACKEND
from .completion import (
    CompletionResult,
    FillMethod,
    SolverConfig,
    best_completion_bound,
    complete,
    spanning_tree_fill,
)
from .consistency import (
    Verdict,
    analyze,
    classic_cr,
    classify_parametric_ci,
    parametric_table,
)
from .graph import (
    ComparisonGraph,
    build_graph,
    is_connected,
    is_spanning_tree,
    max_missing_for_connectivity,
)
from .ioformats import parse_matrix, render_matrix
from .matrices import (
    SAATY_SCALE,
    CompleteMatrix,
    EigenResult,
    IncompleteMatrix,
    consistency_index,
    is_consistent,
    perron,
    validate_complete,
    validate_incomplete,
)
from .randomindex import (
    RandomIndexTable,
    RiSource,
    SimulationResult,
    SimulationSpec,
    approximate_ri,
    compare_configurations,
    estimate_ri,
    generate_random_incomplete,
    lookup_ri,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CompletionResult",
    "FillMethod",
    "SolverConfig",
    "best_completion_bound",
    "complete",
    "spanning_tree_fill",
    "Verdict",
    "analyze",
    "classic_cr",
    "classify_parametric_ci",
    "parametric_table",
    "ComparisonGraph",
    "build_graph",
    "is_connected",
    "is_spanning_tree",
    "max_missing_for_connectivity",
    "parse_matrix",
    "render_matrix",
    "SAATY_SCALE",
    "CompleteMatrix",
    "EigenResult",
    "IncompleteMatrix",
    "consistency_index",
    "is_consistent",
    "perron",
    "validate_complete",
    "validate_incomplete",
    "RandomIndexTable",
    "RiSource",
    "SimulationResult",
    "SimulationSpec",
    "approximate_ri",
    "compare_configurations",
    "estimate_ri",
    "generate_random_incomplete",
    "lookup_ri",
]
