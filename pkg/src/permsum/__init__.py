"""Distinguishing weight sequences for permutation sums.

Find, verify and minimize integer weights g making every sum
``sum_j g[j] * x[p(j)]`` unique across the permutations p of {1..n},
and run the nut trick those sums make possible.
"""

from ._backend import BACKEND
from .construct import (
    ConstraintRecord,
    GreedyTrace,
    LevelTrace,
    base_sequence,
    enumerate_constraints,
    greedy_sequence,
    min_weight_at,
)
from .errors import PermsumError
from .optsearch import SearchConfig, SearchResult, difference_vectors, exact_search
from .permcore import (
    OrderRelation,
    Ordering,
    Permutation,
    compare_antilex,
    enumerate_antilex,
    enumeration_limit,
    format_one_line,
    format_reversed,
    parse_one_line,
    parse_reversed,
    predecessor,
    successor,
)
from .trick import Assignment, TrickPlan, decode, encode, plan
from .weighting import (
    InputVector,
    SumTable,
    VerificationReport,
    WeightSeq,
    eval_sum,
    extremal_sums,
    shift_inputs,
    sum_table,
    verify_distinct,
    verify_order_compatible,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Assignment",
    "ConstraintRecord",
    "GreedyTrace",
    "InputVector",
    "LevelTrace",
    "OrderRelation",
    "Ordering",
    "PermsumError",
    "Permutation",
    "SearchConfig",
    "SearchResult",
    "SumTable",
    "TrickPlan",
    "VerificationReport",
    "WeightSeq",
    "base_sequence",
    "compare_antilex",
    "decode",
    "difference_vectors",
    "encode",
    "enumerate_antilex",
    "enumerate_constraints",
    "enumeration_limit",
    "eval_sum",
    "exact_search",
    "extremal_sums",
    "format_one_line",
    "format_reversed",
    "greedy_sequence",
    "min_weight_at",
    "parse_one_line",
    "parse_reversed",
    "plan",
    "predecessor",
    "shift_inputs",
    "successor",
    "sum_table",
    "verify_distinct",
    "verify_order_compatible",
]
