"""Exact minimization of the largest permutation sum.

Finds the strictly increasing integer weights whose largest permutation
sum (ascending weights paired with ascending inputs) is smallest among
all distinguishing sequences.  This is the independent referee for the
constructive methods: it only shares the difference-vector view of
distinctness, never the chain walk.

The search runs in two passes.  A branch-and-bound pass over increasing
weight prefixes establishes the optimal objective: a prefix dies when
its cheapest completion already reaches the best known objective, or
when two arrangements of some value subset over the settled positions
weigh the same — such a pair extends to two full permutations with equal
sums no matter which weights follow.  A second, lexicographic pass then
returns the smallest weight tuple attaining the optimum.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from itertools import combinations, permutations

from . import _backend
from .construct import greedy_sequence
from .errors import (
    InfeasibleBudget,
    NonInjectiveInputs,
    SizeMismatch,
    TooLarge,
    UnsupportedInputs,
)
from .weighting import InputVector, WeightSeq, extremal_sums

SEARCH_MAX_N = 5


@dataclass(frozen=True)
class SearchConfig:
    """What to search for.

    ``budget`` caps the objective; when omitted it defaults to the greedy
    sequence's largest sum, which is always attainable for the identity
    inputs.  ``allow_zero`` admits a leading zero weight.
    """

    n: int
    budget: int | None = None
    allow_zero: bool = False
    inputs: InputVector | None = None


@dataclass(frozen=True)
class SearchResult:
    weights: WeightSeq
    max_sum: int
    optimal: bool
    nodes_explored: int
    budget: int


def difference_vectors(n: int, limit: int = SEARCH_MAX_N) -> tuple[tuple[int, ...], ...]:
    """Componentwise differences p - q over all ordered pairs p != q.

    Every vector sums to zero, and a weight sequence is distinguishing
    exactly when none of these vectors is orthogonal to it.  Duplicates
    are kept (several pairs can share a difference), so the count is
    n! * (n! - 1).
    """
    if n > limit:
        raise TooLarge(f"difference vectors for n={n} exceed the limit {limit}")
    perms = list(permutations(range(1, n + 1)))
    out: list[tuple[int, ...]] = []
    for p in perms:
        for q in perms:
            if p != q:
                out.append(tuple(a - b for a, b in zip(p, q)))
    return tuple(out)


def _prepare_inputs(cfg: SearchConfig) -> tuple[int, ...]:
    x = cfg.inputs if cfg.inputs is not None else InputVector.identity(cfg.n)
    if x.n != cfg.n:
        raise SizeMismatch(f"config n={cfg.n} vs {x.n} inputs")
    if not x.is_injective():
        raise NonInjectiveInputs(f"inputs {x.x} repeat a value")
    if any(v < 0 for v in x.x):
        raise UnsupportedInputs("exact search requires nonnegative inputs")
    return tuple(sorted(x.x))


def _default_budget(cfg: SearchConfig, x: InputVector) -> int:
    weights = greedy_sequence(cfg.n).weights
    _, hi = extremal_sums(weights, x)
    return hi


class _Searcher:
    """Shared state for the two search passes over one configuration."""

    def __init__(self, n: int, xs: tuple[int, ...], first_floor: int):
        self.n = n
        self.xs = xs
        self.first_floor = first_floor
        self.nodes = 0
        # cheapest-completion helpers: tail_count[d] = sum of xs[d:],
        # tail_step[d] = sum of (j - d + 1) * xs[j] for j >= d.
        self.tail_count = [0] * (n + 1)
        self.tail_step = [0] * (n + 1)
        for d in range(n - 1, -1, -1):
            self.tail_count[d] = self.tail_count[d + 1] + xs[d]
            self.tail_step[d] = self.tail_step[d + 1] + self.tail_count[d + 1] + xs[d]
        # per prefix length: value subsets and arrangement patterns, flat
        self.subsets: dict[int, array] = {}
        self.patterns: dict[int, array] = {}
        for k in range(2, n + 1):
            flat_s = array("q")
            for subset in combinations(xs, k):
                flat_s.extend(subset)
            flat_p = array("q")
            for pattern in permutations(range(k)):
                flat_p.extend(pattern)
            self.subsets[k] = flat_s
            self.patterns[k] = flat_p

    def _feasible(self, prefix: list[int]) -> bool:
        k = len(prefix)
        if k < 2:
            return True
        return _backend.prefix_feasible(
            tuple(prefix), k, self.subsets[k], self.patterns[k]
        )

    def minimize(self, cap: int) -> tuple[int, tuple[int, ...] | None]:
        """Best objective <= cap, or (cap + 1, None) when none exists."""
        best = cap + 1
        best_w: tuple[int, ...] | None = None
        n, xs = self.n, self.xs
        prefix: list[int] = []

        def extend(d: int, obj: int, last: int) -> None:
            nonlocal best, best_w
            v = last + 1
            while True:
                min_completion = obj + v * xs[d] + v * self.tail_count[d + 1] + self.tail_step[d + 1]
                if min_completion >= best:
                    return
                self.nodes += 1
                prefix.append(v)
                if self._feasible(prefix):
                    if d == n - 1:
                        best = min_completion
                        best_w = tuple(prefix)
                    else:
                        extend(d + 1, obj + v * xs[d], v)
                prefix.pop()
                v += 1

        extend(0, 0, self.first_floor - 1)
        return best, best_w

    def lex_least(self, target: int) -> tuple[int, ...] | None:
        """First feasible leaf, in lex order, with objective <= target."""
        n, xs = self.n, self.xs
        prefix: list[int] = []

        def extend(d: int, obj: int, last: int) -> tuple[int, ...] | None:
            v = last + 1
            while True:
                min_completion = obj + v * xs[d] + v * self.tail_count[d + 1] + self.tail_step[d + 1]
                if min_completion > target:
                    return None
                self.nodes += 1
                prefix.append(v)
                if self._feasible(prefix):
                    if d == n - 1:
                        return tuple(prefix)
                    found = extend(d + 1, obj + v * xs[d], v)
                    if found is not None:
                        return found
                prefix.pop()
                v += 1

        return extend(0, 0, self.first_floor - 1)


def exact_search(cfg: SearchConfig, limit: int = SEARCH_MAX_N) -> SearchResult:
    """Minimize the largest sum over distinguishing weight sequences.

    Ties on the objective resolve to the lexicographically smallest
    weights; ``optimal`` is always true on return since the bounded
    space is exhausted.  Raises InfeasibleBudget when an explicit budget
    admits no distinguishing sequence at all.
    """
    if cfg.n < 1:
        raise TooLarge(f"n={cfg.n} must be positive")
    if cfg.n > limit:
        raise TooLarge(f"exact search for n={cfg.n} exceeds the limit {limit}")
    xs = _prepare_inputs(cfg)
    x = cfg.inputs if cfg.inputs is not None else InputVector.identity(cfg.n)
    first_floor = 0 if cfg.allow_zero else 1

    if cfg.n == 1:
        budget = cfg.budget if cfg.budget is not None else first_floor * xs[0]
        objective = first_floor * xs[0]
        if objective > budget:
            raise InfeasibleBudget(f"budget {budget} below the least objective {objective}")
        weights = WeightSeq((first_floor,), allow_zero=cfg.allow_zero)
        return SearchResult(weights, objective, True, 1, budget)

    budget = cfg.budget if cfg.budget is not None else _default_budget(cfg, x)
    searcher = _Searcher(cfg.n, xs, first_floor)
    best, _ = searcher.minimize(budget)
    if best > budget:
        raise InfeasibleBudget(f"no distinguishing sequence has objective <= {budget}")
    weights_tuple = searcher.lex_least(best)
    assert weights_tuple is not None
    weights = WeightSeq(weights_tuple, allow_zero=cfg.allow_zero)
    return SearchResult(
        weights=weights,
        max_sum=best,
        optimal=True,
        nodes_explored=searcher.nodes,
        budget=budget,
    )


def result_json_payload(result: SearchResult) -> dict:
    return {
        "weights": list(result.weights.g),
        "max_sum": result.max_sum,
        "optimal": result.optimal,
        "nodes_explored": result.nodes_explored,
        "budget": result.budget,
    }
