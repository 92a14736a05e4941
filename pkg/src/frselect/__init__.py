"""Floyd-Rivest style selection with exact comparison counting.

    >>> from frselect import select
    >>> select([5, 1, 4, 2, 3], 2).value
    2
"""

from .bench import (Family, InputSpec, OracleMismatch, TrialReport, generate,
                    run_experiment)
from .bounds import hypergeometric_check, validate_bounds
from .core import (CountingComparator, GapMode, Metrics, Params, RankError,
                   ScheduleMode, Variant, check_params, f, validate_params)
from .engine import Selection, select
from .fallbacks import pick_select, quickselect, select_nonrecursive, sort_select
from .rng import RngStream
from .schedule import (Schedule, bounding_ranks, gap, make_schedule, p_fail,
                       partition_cost_bound, pivot_ranks, schedule_capped,
                       schedule_plain)
from .tables import emit_table

__version__ = "0.1.0"

__all__ = [
    "CountingComparator", "Family", "GapMode", "InputSpec", "Metrics", "OracleMismatch",
    "Params", "RankError", "RngStream", "Schedule", "ScheduleMode", "Selection",
    "TrialReport", "Variant", "bounding_ranks", "check_params", "emit_table", "f", "gap",
    "generate", "hypergeometric_check", "make_schedule", "p_fail", "partition_cost_bound",
    "pick_select", "pivot_ranks", "quickselect", "run_experiment", "schedule_capped",
    "schedule_plain", "select", "select_nonrecursive", "sort_select", "validate_bounds",
    "validate_params",
]
