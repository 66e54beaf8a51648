"""Permutations in one-line notation and their antilexicographic order.

A permutation of {1..n} is stored as the tuple ``(p(1), ..., p(n))``.
The antilexicographic order compares two permutations from the highest
position downward: the largest position where they differ decides, and
the permutation with the bigger value there is the greater one.  Under
this order the identity ``(1, 2, ..., n)`` is the greatest element and
the descending permutation ``(n, ..., 2, 1)`` the least.

The order admits a constructive successor: only a prefix of positions
changes, which makes streaming all n! permutations cheap.
"""

from __future__ import annotations

import os
import re
from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from math import factorial
from typing import Iterator

from .errors import (
    MalformedInput,
    NoPredecessor,
    NoSuccessor,
    NotAPermutation,
    SizeMismatch,
    TooLarge,
)

DEFAULT_MAX_N = 10
ENV_MAX_N = "PERMSUM_MAX_N"


def enumeration_limit() -> int:
    """Largest n for which full S_n enumeration is permitted.

    Defaults to 10 (3.6M permutations); the PERMSUM_MAX_N environment
    variable overrides it for expert use.
    """
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise MalformedInput(f"{ENV_MAX_N} must be an integer, got {raw!r}")
    if value < 1:
        raise MalformedInput(f"{ENV_MAX_N} must be positive, got {value}")
    return value


def check_enumerable(n: int, limit: int | None = None) -> None:
    """Raise TooLarge when enumerating S_n would exceed the limit."""
    cap = enumeration_limit() if limit is None else limit
    if n > cap:
        raise TooLarge(f"n={n} exceeds the enumeration limit {cap}")


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation: values[j-1] = p(j)."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n < 1:
            raise NotAPermutation("a permutation needs at least one element")
        if sorted(values) != list(range(1, n + 1)):
            raise NotAPermutation(f"{values} is not a rearrangement of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, j: int) -> int:
        """Image of position j (1-based)."""
        if not 1 <= j <= self.n:
            raise IndexError(f"position {j} out of range 1..{self.n}")
        return self.values[j - 1]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        """The greatest permutation: (1, 2, ..., n)."""
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def descending(cls, n: int) -> "Permutation":
        """The least permutation: (n, ..., 2, 1)."""
        return cls(tuple(range(n, 0, -1)))

    def is_identity(self) -> bool:
        return all(v == j for j, v in enumerate(self.values, start=1))

    def is_descending(self) -> bool:
        n = self.n
        return all(v == n - j for j, v in enumerate(self.values))

    def __lt__(self, other: "Permutation") -> bool:
        return compare_antilex(self, other).outcome is Ordering.LESS

    def __gt__(self, other: "Permutation") -> bool:
        return compare_antilex(self, other).outcome is Ordering.GREATER

    def __le__(self, other: "Permutation") -> bool:
        return not self > other

    def __ge__(self, other: "Permutation") -> bool:
        return not self < other

    def __str__(self) -> str:
        return format_one_line(self)


class Ordering(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@dataclass(frozen=True)
class OrderRelation:
    """Outcome of an antilexicographic comparison.

    ``pivot`` is the largest position where the operands differ; it is
    absent exactly when they are equal, and is always >= 2 otherwise
    (two permutations cannot differ at position 1 alone).
    """

    outcome: Ordering
    pivot: int | None = None

    def __post_init__(self) -> None:
        if (self.outcome is Ordering.EQUAL) != (self.pivot is None):
            raise ValueError("pivot must be present iff the outcome is not EQUAL")
        if self.pivot is not None and self.pivot < 2:
            raise ValueError(f"pivot {self.pivot} below 2 is impossible")


def compare_antilex(p: Permutation, q: Permutation) -> OrderRelation:
    """Compare two permutations antilexicographically.

    >>> compare_antilex(Permutation((1, 3, 4, 2, 5)), Permutation((1, 3, 2, 5, 4)))
    OrderRelation(outcome=<Ordering.GREATER: 'greater'>, pivot=5)
    >>> compare_antilex(Permutation((2, 1, 3)), Permutation((2, 1, 3))).outcome
    <Ordering.EQUAL: 'equal'>
    """
    if p.n != q.n:
        raise SizeMismatch(f"cannot compare sizes {p.n} and {q.n}")
    a, b = p.values, q.values
    for j in range(p.n, 0, -1):
        if a[j - 1] != b[j - 1]:
            outcome = Ordering.GREATER if a[j - 1] > b[j - 1] else Ordering.LESS
            return OrderRelation(outcome, pivot=j)
    return OrderRelation(Ordering.EQUAL)


def _successor_step(p: list[int]) -> int:
    """Advance a one-line value list to its successor in place.

    Returns the 0-based pivot index, or -1 when the list is the identity
    (which has no successor).  The positions left of the pivot hold a
    strictly increasing run before the step and a strictly decreasing
    run after it.
    """
    n = len(p)
    i = 1
    while i < n and p[i] > p[i - 1]:
        i += 1
    if i == n:
        return -1
    v = p[i]
    # prefix p[0:i] is strictly increasing; take the least value above v
    t = bisect_left(p, v, 0, i)
    p[t], p[i] = p[i], p[t]
    p[:i] = p[i - 1 :: -1]
    return i


def _predecessor_step(p: list[int]) -> int:
    """Mirror of _successor_step: move to the predecessor in place."""
    n = len(p)
    i = 1
    while i < n and p[i] < p[i - 1]:
        i += 1
    if i == n:
        return -1
    v = p[i]
    # prefix p[0:i] is strictly decreasing; take the greatest value below v.
    # Values below v form the suffix p[t:i]; find its start.
    t = 0
    while p[t] > v:
        t += 1
    p[t], p[i] = p[i], p[t]
    p[:i] = p[i - 1 :: -1]
    return i


def successor(p: Permutation) -> Permutation:
    """The next permutation under the antilexicographic order.

    >>> successor(Permutation((3, 1, 4, 2, 5))).values
    (1, 3, 4, 2, 5)
    >>> successor(Permutation((3, 2, 1))).values
    (2, 3, 1)
    """
    work = list(p.values)
    if _successor_step(work) < 0:
        raise NoSuccessor("the identity permutation is the greatest element")
    return Permutation(tuple(work))


def predecessor(p: Permutation) -> Permutation:
    """The previous permutation; exact inverse of :func:`successor`.

    >>> predecessor(Permutation((1, 3, 4, 2, 5))).values
    (3, 1, 4, 2, 5)
    """
    work = list(p.values)
    if _predecessor_step(work) < 0:
        raise NoPredecessor("the descending permutation is the least element")
    return Permutation(tuple(work))


def iter_one_line(n: int) -> Iterator[tuple[int, ...]]:
    """Yield all n! one-line tuples in increasing antilexicographic order.

    Internal workhorse: starts at (n, ..., 1), ends at the identity.
    """
    p = list(range(n, 0, -1))
    yield tuple(p)
    while _successor_step(p) >= 0:
        yield tuple(p)


def enumerate_antilex(n: int, limit: int | None = None) -> Iterator[Permutation]:
    """Stream all permutations of {1..n} in increasing antilex order.

    >>> [q.values for q in enumerate_antilex(3)]
    [(3, 2, 1), (2, 3, 1), (3, 1, 2), (1, 3, 2), (2, 1, 3), (1, 2, 3)]
    """
    if n < 1:
        raise NotAPermutation("n must be at least 1")
    check_enumerable(n, limit)
    return (Permutation(values) for values in iter_one_line(n))


def perm_at_walk(n: int, k: int) -> Permutation:
    """The k-th element (0-based) of the antilex enumeration of S_n.

    Computed directly by mixed-radix (factorial base) unranking rather
    than by walking, so witnesses deep in the stream stay cheap.
    """
    total = factorial(n)
    if not 0 <= k < total:
        raise IndexError(f"walk index {k} out of range for n={n}")
    # The antilex order on one-line tuples equals the lexicographic order
    # on their reversals, so unrank lexicographically and reverse.
    available = list(range(1, n + 1))
    word: list[int] = []
    for j in range(n, 0, -1):
        block = factorial(j - 1)
        d, k = divmod(k, block)
        word.append(available.pop(d))
    return Permutation(tuple(reversed(word)))


_REVERSED_WRAP = re.compile(r"^(?:⟨|<)?([^⟨⟩<>←]*?)(?:⟩|>)?(?:←)?$")


def _parse_int_list(text: str) -> list[int]:
    items = [part.strip() for part in text.split(",")]
    if any(not item for item in items):
        raise MalformedInput(f"empty entry in {text!r}")
    try:
        return [int(item) for item in items]
    except ValueError:
        raise MalformedInput(f"non-integer entry in {text!r}")


def parse_one_line(text: str) -> Permutation:
    """Parse comma-separated one-line values, e.g. ``3,1,4,2``."""
    values = _parse_int_list(text.strip())
    return Permutation(tuple(values))


def format_one_line(p: Permutation) -> str:
    return ",".join(str(v) for v in p.values)


def parse_reversed(text: str) -> Permutation:
    """Parse the reversed angle-bracket display, e.g. ``⟨5,2,4,3,1⟩←``.

    The k-th listed entry is p(n+1-k); brackets and the arrow are
    optional, so a bare reversed list is accepted too.

    >>> parse_reversed("⟨5,2,4,3,1⟩←").values
    (1, 3, 4, 2, 5)
    """
    stripped = text.strip()
    match = _REVERSED_WRAP.match(stripped)
    if match is None:
        raise MalformedInput(f"cannot parse {text!r} as a reversed permutation")
    values = _parse_int_list(match.group(1))
    return Permutation(tuple(reversed(values)))


def format_reversed(p: Permutation) -> str:
    """Render a permutation in the reversed angle-bracket display.

    >>> format_reversed(Permutation((4, 2, 1, 3)))
    '⟨3,1,2,4⟩←'
    """
    return "⟨" + ",".join(str(v) for v in reversed(p.values)) + "⟩←"
