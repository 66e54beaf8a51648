"""Pure-Python kernels for the hot loops.

These are the reference twins of the compiled module ``_speedups``;
:mod:`permsum._backend` picks whichever is importable.  Both expose the
same three functions with identical semantics, so every caller and test
can run against either.

Callers guarantee that no intermediate product or running sum can leave
the signed 64-bit range (see ``weighting._check_sum_bound``), so the
loops here do unchecked arithmetic.
"""

from __future__ import annotations

from array import array
from bisect import bisect_left
from math import factorial
from typing import Sequence


def walk_sums(g: Sequence[int], x: Sequence[int]) -> tuple[array, int]:
    """All n! permutation sums in antilexicographic walk order.

    Returns ``(sums, first_drop)`` where ``sums[k]`` is the weighted sum
    of the k-th permutation of the walk (descending start, identity end)
    and ``first_drop`` is the first index whose sum fails to strictly
    exceed its predecessor's, or -1 when the whole chain increases.

    Each successor step rewrites only a prefix of positions, so the sum
    is updated incrementally over that prefix.
    """
    n = len(g)
    count = factorial(n)
    sums = array("q", bytes(8 * count))
    xv = list(x)
    p = list(range(n, 0, -1))
    total = 0
    for j in range(n):
        total += g[j] * xv[p[j] - 1]
    sums[0] = total
    prev = total
    first_drop = -1
    for k in range(1, count):
        i = 1
        while p[i] > p[i - 1]:
            i += 1
        old = 0
        for j in range(i + 1):
            old += g[j] * xv[p[j] - 1]
        v = p[i]
        t = bisect_left(p, v, 0, i)
        p[t], p[i] = p[i], p[t]
        p[:i] = p[i - 1 :: -1]
        new = 0
        for j in range(i + 1):
            new += g[j] * xv[p[j] - 1]
        total += new - old
        sums[k] = total
        if first_drop < 0 and total <= prev:
            first_drop = k
        prev = total
    return sums, first_drop


def first_duplicate(sums: Sequence[int]) -> tuple[int, int] | None:
    """Earliest repeated value in ``sums``.

    Returns ``(j, k)`` with j < k minimizing k and then j, or None when
    all values are distinct.
    """
    seen: dict[int, int] = {}
    for k, s in enumerate(sums):
        j = seen.setdefault(s, k)
        if j != k:
            return j, k
    return None


def prefix_feasible(
    g: Sequence[int],
    k: int,
    subsets_flat: Sequence[int],
    patterns_flat: Sequence[int],
) -> bool:
    """Check a settled weight prefix for forced sum collisions.

    ``g`` holds the first k weights.  ``subsets_flat`` packs the value
    subsets to test, k entries each; ``patterns_flat`` packs index
    permutations of range(k), likewise.  The prefix survives iff, for
    every subset, all pattern-weighted sums are pairwise distinct; two
    equal sums mean two full permutations (agreeing beyond the prefix)
    would collide no matter how the remaining weights are chosen.
    """
    n_subsets = len(subsets_flat) // k
    n_patterns = len(patterns_flat) // k
    for s in range(n_subsets):
        base = s * k
        seen = set()
        for r in range(n_patterns):
            pat = r * k
            total = 0
            for i in range(k):
                total += g[i] * subsets_flat[base + patterns_flat[pat + i]]
            if total in seen:
                return False
            seen.add(total)
    return True
