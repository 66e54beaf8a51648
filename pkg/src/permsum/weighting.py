"""Weighted permutation sums: evaluation, tables, and verification.

Given weights g (one per object position) and inputs x (one per person),
each permutation p yields the sum ``T(p) = sum_j g[j] * x[p(j)]``.  A
weight sequence is *distinguishing* for x when all n! sums differ, and
*order-compatible* when the sums strictly increase along the whole
antilexicographic chain — which implies distinctness outright and is
what the constructive methods in :mod:`permsum.construct` guarantee.

All arithmetic is exact signed 64-bit; anything that could leave that
range raises :class:`permsum.errors.Overflow` instead of wrapping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from . import _backend
from .errors import (
    InvalidInputs,
    InvalidWeights,
    NonInjectiveInputs,
    Overflow,
    SizeMismatch,
)
from .permcore import Permutation, check_enumerable, iter_one_line, perm_at_walk

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


def _check_int64(value: int, what: str) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise Overflow(f"{what} {value} does not fit a signed 64-bit integer")
    return value


@dataclass(frozen=True)
class WeightSeq:
    """Strictly increasing integer weights, one per object position.

    The first weight must be positive unless ``allow_zero`` is set, in
    which case a leading zero is admitted (the zero-weighted object's
    holder is then inferred by elimination).
    """

    g: tuple[int, ...]
    allow_zero: bool = False

    def __post_init__(self) -> None:
        g = tuple(self.g)
        object.__setattr__(self, "g", g)
        if not g:
            raise InvalidWeights("weight sequence must be nonempty")
        for value in g:
            if not isinstance(value, int):
                raise InvalidWeights(f"weight {value!r} is not an integer")
            _check_int64(value, "weight")
        floor = 0 if self.allow_zero else 1
        if g[0] < floor:
            raise InvalidWeights(f"first weight {g[0]} must be >= {floor}")
        for a, b in zip(g, g[1:]):
            if a >= b:
                raise InvalidWeights(f"weights must strictly increase, got {a} before {b}")

    @property
    def n(self) -> int:
        return len(self.g)


@dataclass(frozen=True)
class InputVector:
    """Integer inputs, one per person.  Defaults to the identity 1..n."""

    x: tuple[int, ...]

    def __post_init__(self) -> None:
        x = tuple(self.x)
        object.__setattr__(self, "x", x)
        if not x:
            raise InvalidInputs("input vector must be nonempty")
        for value in x:
            if not isinstance(value, int):
                raise InvalidInputs(f"input {value!r} is not an integer")
            _check_int64(value, "input")

    @classmethod
    def identity(cls, n: int) -> "InputVector":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.x)

    def is_injective(self) -> bool:
        return len(set(self.x)) == len(self.x)


CollisionWitness = tuple[Permutation, Permutation, int]
OrderWitness = tuple[Permutation, Permutation]


@dataclass(frozen=True)
class VerificationReport:
    """What a full scan over S_n established for one (weights, inputs) pair.

    ``collision_witness`` is the canonical earliest antilex pair sharing
    a sum, given as (greater, smaller, sum); ``order_witness`` is the
    first successor step whose sum fails to increase, as (later, earlier).
    """

    distinct: bool
    order_compatible: bool
    collision_witness: CollisionWitness | None = None
    order_witness: OrderWitness | None = None

    def __post_init__(self) -> None:
        if self.distinct == (self.collision_witness is not None):
            raise ValueError("collision witness must be present iff not distinct")
        if self.order_compatible and not self.distinct:
            raise ValueError("an order-compatible sequence is always distinguishing")


@dataclass(frozen=True, eq=False)
class SumTable:
    """The finished map from sum value to the permutations attaining it.

    Permutations within an entry appear in antilex order; the total count
    over all entries is n!.
    """

    weights: WeightSeq
    inputs: InputVector
    entries: Mapping[int, tuple[Permutation, ...]]

    @property
    def n(self) -> int:
        return self.weights.n

    def min_sum(self) -> int:
        return min(self.entries)

    def max_sum(self) -> int:
        return max(self.entries)

    def lookup(self, total: int) -> tuple[Permutation, ...]:
        return self.entries.get(total, ())


def _require_sizes(w: WeightSeq, x: InputVector) -> int:
    if w.n != x.n:
        raise SizeMismatch(f"{w.n} weights vs {x.n} inputs")
    return w.n


def _check_sum_bound(w: WeightSeq, x: InputVector) -> None:
    """Guarantee no intermediate of any permutation sum can overflow.

    Every partial sum is bounded in magnitude by sum(|g_j|) * max(|x_i|),
    computed here in exact big-integer arithmetic.  Inputs passing this
    conservative gate let the kernels run unchecked 64-bit loops.
    """
    bound = sum(abs(gj) for gj in w.g) * max(abs(xi) for xi in x.x)
    if bound > INT64_MAX:
        raise Overflow(
            f"worst-case partial sum {bound} may exceed the signed 64-bit range"
        )


def eval_sum(w: WeightSeq, x: InputVector, p: Permutation) -> int:
    """The weighted sum of one permutation: sum_j g[j] * x[p(j)].

    Every intermediate product and partial sum is checked against the
    signed 64-bit range exactly.
    """
    n = _require_sizes(w, x)
    if p.n != n:
        raise SizeMismatch(f"permutation size {p.n} vs {n} weights")
    total = 0
    for gj, pj in zip(w.g, p.values):
        term = gj * x.x[pj - 1]
        _check_int64(term, "product")
        total += term
        _check_int64(total, "partial sum")
    return total


def shift_inputs(x: InputVector, y: int) -> InputVector:
    """Add the same offset to every input entry.

    Shifting changes every permutation sum by the same constant
    y * sum(g), so distinctness verdicts are unaffected.
    """
    if not isinstance(y, int):
        raise InvalidInputs(f"shift {y!r} is not an integer")
    return InputVector(tuple(_check_int64(xi + y, "shifted input") for xi in x.x))


def extremal_sums(w: WeightSeq, x: InputVector) -> tuple[int, int]:
    """Smallest and largest permutation sum, in closed form.

    With ascending weights, the maximum pairs them with ascending inputs
    and the minimum with descending inputs (rearrangement inequality);
    no enumeration is needed, so this works beyond the walk limit.
    """
    n = _require_sizes(w, x)
    xs = sorted(x.x)
    hi = 0
    lo = 0
    for j in range(n):
        hi += w.g[j] * xs[j]
        lo += w.g[j] * xs[n - 1 - j]
    _check_int64(hi, "maximum sum")
    _check_int64(lo, "minimum sum")
    return lo, hi


def sum_table(w: WeightSeq, x: InputVector, limit: int | None = None) -> SumTable:
    """Materialize every permutation sum over S_n.

    Entries map each distinct sum to the permutations attaining it, in
    antilex order.  Requires n within the enumeration limit.
    """
    n = _require_sizes(w, x)
    check_enumerable(n, limit)
    _check_sum_bound(w, x)
    entries: dict[int, list[Permutation]] = {}
    for values in iter_one_line(n):
        total = 0
        for j in range(n):
            total += w.g[j] * x.x[values[j] - 1]
        entries.setdefault(total, []).append(Permutation(values))
    frozen = {total: tuple(perms) for total, perms in sorted(entries.items())}
    return SumTable(weights=w, inputs=x, entries=frozen)


def _scan(w: WeightSeq, x: InputVector, limit: int | None) -> VerificationReport:
    n = _require_sizes(w, x)
    check_enumerable(n, limit)
    if not x.is_injective():
        raise NonInjectiveInputs(f"inputs {x.x} repeat a value")
    _check_sum_bound(w, x)
    sums, first_drop = _backend.walk_sums(w.g, x.x)
    if first_drop < 0:
        # strictly increasing chain: distinct follows with no further work
        return VerificationReport(distinct=True, order_compatible=True)
    order_witness = (perm_at_walk(n, first_drop), perm_at_walk(n, first_drop - 1))
    dup = _backend.first_duplicate(sums)
    if dup is None:
        return VerificationReport(
            distinct=True, order_compatible=False, order_witness=order_witness
        )
    j, k = dup
    witness = (perm_at_walk(n, k), perm_at_walk(n, j), int(sums[k]))
    return VerificationReport(
        distinct=False,
        order_compatible=False,
        collision_witness=witness,
        order_witness=order_witness,
    )


def verify_distinct(
    w: WeightSeq, x: InputVector, limit: int | None = None
) -> VerificationReport:
    """Decide whether all n! permutation sums are pairwise distinct.

    On failure the witness is the earliest colliding pair of the antilex
    walk.  The report also carries the order-compatibility verdict, which
    the same scan yields for free.
    """
    return _scan(w, x, limit)


def verify_order_compatible(
    w: WeightSeq, x: InputVector, limit: int | None = None
) -> VerificationReport:
    """Decide whether sums strictly increase along the antilex chain.

    Checking every successor step suffices: the chain covers all of S_n,
    so transitivity extends strict growth to every ordered pair.
    """
    return _scan(w, x, limit)


def table_csv(table: SumTable) -> str:
    """CSV form: header then one ``sum,v1,...,vn`` row per permutation."""
    lines = ["sum,perm"]
    for total, perms in table.entries.items():
        for p in perms:
            lines.append(f"{total}," + ",".join(str(v) for v in p.values))
    return "\n".join(lines) + "\n"


def parse_table_csv(text: str) -> dict[int, tuple[tuple[int, ...], ...]]:
    """Inverse of :func:`table_csv`, keyed by sum."""
    entries: dict[int, list[tuple[int, ...]]] = {}
    lines = text.strip().split("\n")
    for line in lines[1:]:
        parts = [int(item) for item in line.split(",")]
        entries.setdefault(parts[0], []).append(tuple(parts[1:]))
    return {total: tuple(perms) for total, perms in entries.items()}


def table_json_payload(table: SumTable) -> dict:
    return {
        "weights": list(table.weights.g),
        "inputs": list(table.inputs.x),
        "entries": [
            {"sum": total, "perms": [list(p.values) for p in perms]}
            for total, perms in table.entries.items()
        ],
    }


def report_json_payload(w: WeightSeq, x: InputVector, report: VerificationReport) -> dict:
    payload: dict = {
        "weights": list(w.g),
        "inputs": list(x.x),
        "distinct": report.distinct,
        "order_compatible": report.order_compatible,
        "collision_witness": None,
        "order_witness": None,
    }
    if report.collision_witness is not None:
        greater, smaller, total = report.collision_witness
        payload["collision_witness"] = {
            "greater": list(greater.values),
            "smaller": list(smaller.values),
            "sum": total,
        }
    if report.order_witness is not None:
        later, earlier = report.order_witness
        payload["order_witness"] = {
            "later": list(later.values),
            "earlier": list(earlier.values),
        }
    return payload


def as_weights(values: "WeightSeq | Iterable[int]", allow_zero: bool = False) -> WeightSeq:
    if isinstance(values, WeightSeq):
        return values
    return WeightSeq(tuple(values), allow_zero=allow_zero)


def as_inputs(values: "InputVector | Iterable[int] | None", n: int | None = None) -> InputVector:
    if values is None:
        if n is None:
            raise InvalidInputs("need either input values or a size")
        return InputVector.identity(n)
    if isinstance(values, InputVector):
        return values
    return InputVector(tuple(values))
