"""Longest increasing subsequences, end to end: patience sorting, the RSK
bijection, hook-length counting, Plancherel sampling, Poissonized geometry,
and Tracy-Widom numerics."""

__version__ = "0.1.0"

from .errors import InsufficientDataError, NumericalFailureError, SizeLimitError
from .permcore import (
    Permutation,
    PatienceResult,
    erdos_szekeres_check,
    lds,
    lis_bruteforce,
    lis_length,
    lis_patience,
    uniform_random,
)
from .young import (
    Cell,
    Partition,
    StandardYoungTableau,
    check_syt_sum_identity,
    corners,
    enumerate_partitions,
    enumerate_syt,
    hook_length,
    hook_lengths,
    max_syt_count,
    syt_count_hlf,
    transpose,
)
from .rsk import TableauPair, rsk_insert, rsk_inverse, shape_of
from .plancherel import (
    PlancherelSample,
    expected_lis_exact,
    hook_walk_corner,
    plancherel_prob,
    sample_shape_growth,
    sample_shape_rsk,
    sample_syt_hookwalk,
)
from .hammersley import (
    CurvePoint,
    GreedyPath,
    PointSet,
    boundary_deviation,
    expected_increasing_subsequences,
    greedy_ne_path,
    limit_curve,
    limit_curve_table,
    longest_chain,
    nearest_ne,
    poisson_square,
    rotated_limit_profile,
    scaled_boundary,
    step_statistics,
)
from .boarding import STRATEGIES, boarding_permutation

# The distribution-table module pulls in scipy, which costs a noticeable
# fraction of a second at import time. It is loaded on first attribute
# access instead so that the purely combinatorial commands stay snappy.
_LAZY = {
    "FluctuationResult",
    "PainleveSolution",
    "RefinedLisEstimate",
    "TWTable",
    "fluctuation_experiment",
    "refined_expectation",
    "solve_painleve_ii",
    "tw_cdf_table",
    "tw_mean_variance",
}


def __getattr__(name: str):
    if name in _LAZY or name == "tracywidom":
        import importlib

        module = importlib.import_module(".tracywidom", __name__)
        return module if name == "tracywidom" else getattr(module, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = sorted(
    [name for name in dir() if not name.startswith("_") and name != "annotations"]
    + sorted(_LAZY)
)
