"""The nut trick, executable.

Hand person i its ``x[i]`` starting nuts, put ``pool`` more on the
table, and ask whoever picks object j to take ``g[j]`` times their
starting count from the pool.  Because the weights are distinguishing,
the count left on the table identifies the whole object assignment:
``plan`` fixes the numbers, ``encode`` computes the leftover for a given
assignment, and ``decode`` inverts it by sum-table lookup.
"""

from __future__ import annotations

from dataclasses import dataclass
from string import ascii_lowercase
from typing import Iterable, Sequence

from .construct import base_sequence, greedy_sequence
from .errors import CollidingWeights, PoolTooSmall, SizeMismatch, UnknownSum
from .permcore import Permutation
from .weighting import (
    InputVector,
    SumTable,
    WeightSeq,
    as_weights,
    eval_sum,
    extremal_sums,
    sum_table,
    verify_distinct,
)


def default_labels(n: int) -> tuple[str, ...]:
    """Object names: a, b, c, ... then obj27, obj28, ... past the alphabet."""
    labels = []
    for j in range(n):
        labels.append(ascii_lowercase[j] if j < len(ascii_lowercase) else f"obj{j + 1}")
    return tuple(labels)


@dataclass(frozen=True)
class TrickPlan:
    """Everything the performer needs: inputs, weights, pool, labels.

    The pool covers the largest possible sum, so the table is never
    overdrawn; the weights are verified distinguishing at construction.
    """

    n: int
    inputs: InputVector
    weights: WeightSeq
    pool: int
    labels: tuple[str, ...]

    @property
    def table(self) -> SumTable:
        cached = getattr(self, "_table", None)
        if cached is None:
            cached = sum_table(self.weights, self.inputs)
            object.__setattr__(self, "_table", cached)
        return cached


@dataclass(frozen=True)
class Assignment:
    """A decoded outcome: who chose what, and what they took for it."""

    perm: Permutation
    readable: tuple[tuple[str, int, int], ...]  # (object label, person, nuts taken)


def _assemble(
    n: int,
    x: InputVector,
    w: WeightSeq,
    pool: int | None,
    labels: Sequence[str] | None,
) -> TrickPlan:
    if w.n != n:
        raise SizeMismatch(f"{w.n} weights for n={n}")
    if x.n != n:
        raise SizeMismatch(f"{x.n} inputs for n={n}")
    report = verify_distinct(w, x)
    if not report.distinct:
        greater, smaller, total = report.collision_witness
        raise CollidingWeights(
            f"weights {w.g} collide: {greater.values} and {smaller.values} both sum to {total}"
        )
    _, hi = extremal_sums(w, x)
    if pool is None:
        pool = hi
    elif pool < hi:
        raise PoolTooSmall(f"pool {pool} cannot cover the largest sum {hi}")
    names = tuple(labels) if labels is not None else default_labels(n)
    if len(names) != n:
        raise SizeMismatch(f"{len(names)} labels for n={n}")
    return TrickPlan(n=n, inputs=x, weights=w, pool=pool, labels=names)


def plan(
    n: int,
    pool: int | None = None,
    method: str = "greedy",
    weights: WeightSeq | Iterable[int] | None = None,
    base: int | None = None,
    labels: Sequence[str] | None = None,
) -> TrickPlan:
    """Assemble a performable plan.

    Weights come from the explicit ``weights`` argument when given,
    otherwise from ``method``: "greedy" for the constraint-driven
    sequence, "base" for powers of ``base`` (default n).  The pool
    defaults to the exact largest sum; a larger explicit pool just
    leaves more on the table.
    """
    if n < 2:
        raise SizeMismatch(f"the trick needs at least two persons, got n={n}")
    if weights is not None:
        w = as_weights(weights)
    elif method == "greedy":
        w = greedy_sequence(n).weights
    elif method == "base":
        w = base_sequence(n, base if base is not None else n)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _assemble(n, InputVector.identity(n), w, pool, labels)


def encode(plan_: TrickPlan, p: Permutation) -> int:
    """Nuts left on the table when person p(j) chose object j."""
    if p.n != plan_.n:
        raise SizeMismatch(f"permutation size {p.n} vs plan n={plan_.n}")
    return plan_.pool - eval_sum(plan_.weights, plan_.inputs, p)


def decode(plan_: TrickPlan, remaining: int) -> Assignment:
    """Recover the assignment from the leftover count.

    Raises UnknownSum when no permutation attains pool - remaining,
    which signals a miscount during the performance.
    """
    total = plan_.pool - remaining
    matches = plan_.table.lookup(total)
    if not matches:
        raise UnknownSum(f"no assignment leaves {remaining} nuts (sum {total})")
    p = matches[0]
    rows = tuple(
        (plan_.labels[j - 1], p(j), plan_.weights.g[j - 1] * plan_.inputs.x[p(j) - 1])
        for j in range(1, plan_.n + 1)
    )
    return Assignment(perm=p, readable=rows)


def plan_json_payload(plan_: TrickPlan) -> dict:
    return {
        "n": plan_.n,
        "x": list(plan_.inputs.x),
        "g": list(plan_.weights.g),
        "pool": plan_.pool,
        "labels": list(plan_.labels),
    }


def plan_from_json(doc: dict) -> TrickPlan:
    """Rebuild a plan from its JSON document (wrapper tolerated)."""
    if "payload" in doc and isinstance(doc["payload"], dict):
        doc = doc["payload"]
    n = doc["n"]
    x = InputVector(tuple(doc["x"])) if doc.get("x") else InputVector.identity(n)
    return _assemble(
        n=n,
        x=x,
        w=as_weights(tuple(doc["g"])),
        pool=doc["pool"],
        labels=tuple(doc["labels"]) if doc.get("labels") else None,
    )


def assignment_json_payload(plan_: TrickPlan, assignment: Assignment) -> dict:
    total = eval_sum(plan_.weights, plan_.inputs, assignment.perm)
    return {
        "perm": list(assignment.perm.values),
        "sum": total,
        "readable": [
            {"object": label, "person": person, "nuts": nuts}
            for label, person, nuts in assignment.readable
        ],
    }
