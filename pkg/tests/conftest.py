"""Shared brute-force oracles.

Everything here leans on itertools only, so the oracles stay independent
of the walk/constraint machinery they are used to check.
"""

import itertools

import pytest


def oracle_perms(n):
    """All one-line tuples of S_n, itertools order."""
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def oracle_antilex(n):
    """S_n sorted antilexicographically: lex order on reversed tuples."""
    return sorted(oracle_perms(n), key=lambda p: p[::-1])


def oracle_eval(g, x, p):
    return sum(gj * x[pj - 1] for gj, pj in zip(g, p))


def oracle_table(g, x):
    """Map sum -> permutations attaining it (antilex order within)."""
    table = {}
    for p in oracle_antilex(len(g)):
        table.setdefault(oracle_eval(g, x, p), []).append(p)
    return table


def oracle_distinct(g, x):
    return all(len(ps) == 1 for ps in oracle_table(g, x).values())


def oracle_pairwise_order_ok(g, x):
    """Full pairwise check: later in antilex order implies larger sum."""
    chain = oracle_antilex(len(g))
    sums = [oracle_eval(g, x, p) for p in chain]
    return all(
        sums[b] > sums[a]
        for a in range(len(chain))
        for b in range(a + 1, len(chain))
    )


def oracle_first_collision(g, x):
    """Earliest duplicate along the antilex walk: (greater, smaller, sum)."""
    seen = {}
    chain = oracle_antilex(len(g))
    for k, p in enumerate(chain):
        s = oracle_eval(g, x, p)
        if s in seen:
            return p, chain[seen[s]], s
        seen[s] = k
    return None


def oracle_first_drop(g, x):
    """First successor step that fails to increase: (later, earlier)."""
    chain = oracle_antilex(len(g))
    prev = None
    for k, p in enumerate(chain):
        s = oracle_eval(g, x, p)
        if prev is not None and s <= prev:
            return p, chain[k - 1]
        prev = s
    return None


@pytest.fixture
def identity_x():
    def make(n):
        return tuple(range(1, n + 1))

    return make
