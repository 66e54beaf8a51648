"""Constructive weight sequences: power bases and the greedy level build.

Two ways to obtain a distinguishing sequence without searching:

* ``base_sequence(n, m)`` — powers (1, m, ..., m^(n-1)) with m >= n.
  Sums then read off as n-digit base-m numerals, so they can never
  collide, but the largest sum is wildly oversized.

* ``greedy_sequence(n)`` — fix g1=1, g2=2, then give each further level
  j0 the least weight that keeps every successor step's sum strictly
  increasing.  Each adjacent pair of the antilex chain differs only on
  its first j0 positions, and spelling such a pair out turns "the later
  sum must be larger" into a linear lower bound on g_{j0}; the level
  weight is the max of those bounds over every candidate pair shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import BadIndex, BaseTooSmall, PrefixMismatch
from .weighting import WeightSeq, _check_int64, as_weights


def base_sequence(n: int, m: int) -> WeightSeq:
    """Weights (m^0, m^1, ..., m^(n-1)); distinguishing whenever m >= n.

    With injective integer inputs the n! sums are distinct base-m
    numerals (after shifting inputs to 0..n-1, which never affects
    distinctness), hence pairwise different.
    """
    if n < 1:
        raise BadIndex(f"sequence length {n} must be positive")
    if m < n:
        raise BaseTooSmall(f"base {m} is smaller than the sequence length {n}")
    powers = []
    value = 1
    for _ in range(n):
        powers.append(_check_int64(value, "weight"))
        value *= m
    return WeightSeq(tuple(powers))


@dataclass(frozen=True)
class ConstraintRecord:
    """One instantiated successor-pair constraint at level j0.

    ``subset`` is the set of values occupying the first j0 positions in
    both permutations of the pair.  The later permutation puts
    ``pi_pivot`` at position j0 and the rest ascending toward position 1
    (``pi_low``, listed from position j0-1 down to 1); the earlier one
    puts ``rho_pivot`` — the largest subset value below ``pi_pivot`` —
    at j0 and the rest descending toward position 1 (``rho_low``).

    Strict sum growth across the pair demands
    ``g_j0 * diff > rhs`` where ``diff = pi_pivot - rho_pivot`` and
    ``rhs`` weighs the value changes below the pivot with the already
    settled prefix; ``lower_bound`` is the least integer satisfying it.
    """

    j0: int
    subset: tuple[int, ...]
    pi_pivot: int
    rho_pivot: int
    pi_low: tuple[int, ...]
    rho_low: tuple[int, ...]
    rhs: int
    diff: int
    lower_bound: int


@dataclass(frozen=True)
class LevelTrace:
    """The binding constraint at one greedy level, plus how many were seen."""

    j0: int
    examined: int
    binding: ConstraintRecord


@dataclass(frozen=True)
class GreedyTrace:
    """A finished greedy run: the weights and each level's binding record."""

    n: int
    weights: WeightSeq
    per_level: tuple[LevelTrace, ...]


def _make_record(j0: int, subset: tuple[int, ...], pi_pivot: int, prefix: Sequence[int]) -> ConstraintRecord:
    rest_pi = sorted(v for v in subset if v != pi_pivot)
    rho_pivot = max(v for v in subset if v < pi_pivot)
    rest_rho = sorted((v for v in subset if v != rho_pivot), reverse=True)
    # listed from position j0-1 down to position 1
    pi_low = tuple(rest_pi)
    rho_low = tuple(rest_rho)
    # re-read both in position order 1..j0-1 to weigh against the prefix
    pi_by_pos = rest_pi[::-1]
    rho_by_pos = rest_rho[::-1]
    rhs = 0
    for k in range(j0 - 1):
        rhs += prefix[k] * (rho_by_pos[k] - pi_by_pos[k])
    diff = pi_pivot - rho_pivot
    lower_bound = max(1, rhs // diff + 1)
    return ConstraintRecord(
        j0=j0,
        subset=subset,
        pi_pivot=pi_pivot,
        rho_pivot=rho_pivot,
        pi_low=pi_low,
        rho_low=rho_low,
        rhs=rhs,
        diff=diff,
        lower_bound=lower_bound,
    )


def _check_level(n: int, j0: int, prefix: WeightSeq | Iterable[int]) -> WeightSeq:
    if not 3 <= j0 <= n:
        raise BadIndex(f"level {j0} outside 3..{n}")
    weights = as_weights(prefix)
    if weights.n != j0 - 1:
        raise PrefixMismatch(f"level {j0} needs {j0 - 1} prefix weights, got {weights.n}")
    return weights


def enumerate_constraints(
    n: int, j0: int, prefix: WeightSeq | Iterable[int]
) -> Iterator[ConstraintRecord]:
    """All successor-pair constraints binding g_{j0} given the prefix.

    One record per (subset, pivot) choice: every j0-element subset of
    {1..n} crossed with every member except its minimum (the minimum
    has no smaller partner to hand the pivot position to).  That makes
    C(n, j0) * (j0 - 1) records per level.
    """
    weights = _check_level(n, j0, prefix)
    for subset in combinations(range(1, n + 1), j0):
        for pi_pivot in subset[1:]:
            yield _make_record(j0, subset, pi_pivot, weights.g)


def _level_scan(n: int, j0: int, weights: WeightSeq) -> tuple[int, ConstraintRecord, int]:
    best: ConstraintRecord | None = None
    examined = 0
    for record in enumerate_constraints(n, j0, weights):
        examined += 1
        if best is None or record.lower_bound > best.lower_bound:
            best = record
    assert best is not None
    value = max(weights.g[-1] + 1, best.lower_bound)
    return value, best, examined


def min_weight_at(n: int, j0: int, prefix: WeightSeq | Iterable[int]) -> int:
    """Least g_{j0} satisfying every level constraint and the ordering.

    The result is the max of (previous weight + 1) and the strict lower
    bounds of all the level's constraint records.
    """
    weights = _check_level(n, j0, prefix)
    value, _, _ = _level_scan(n, j0, weights)
    return _check_int64(value, "weight")


def greedy_sequence(n: int) -> GreedyTrace:
    """Build weights level by level, each as small as the constraints allow.

    Starts from (1, 2) — the first two weights only need to increase —
    then settles g_3..g_n via :func:`min_weight_at`.  The result keeps
    every successor step strictly increasing, hence is order-compatible
    and in particular distinguishing.
    """
    if n < 2:
        raise BadIndex(f"greedy construction needs n >= 2, got {n}")
    weights = WeightSeq((1, 2))
    levels: list[LevelTrace] = []
    for j0 in range(3, n + 1):
        value, binding, examined = _level_scan(n, j0, weights)
        _check_int64(value, "weight")
        levels.append(LevelTrace(j0=j0, examined=examined, binding=binding))
        weights = WeightSeq(weights.g + (value,))
    return GreedyTrace(n=n, weights=weights, per_level=tuple(levels))


def record_json_payload(record: ConstraintRecord) -> dict:
    return {
        "j0": record.j0,
        "subset": list(record.subset),
        "pi_pivot": record.pi_pivot,
        "rho_pivot": record.rho_pivot,
        "pi_low": list(record.pi_low),
        "rho_low": list(record.rho_low),
        "rhs": record.rhs,
        "diff": record.diff,
        "lower_bound": record.lower_bound,
    }


def trace_json_payload(trace: GreedyTrace) -> dict:
    return {
        "n": trace.n,
        "weights": list(trace.weights.g),
        "levels": [
            {
                "j0": level.j0,
                "examined": level.examined,
                "binding": record_json_payload(level.binding),
            }
            for level in trace.per_level
        ],
    }
