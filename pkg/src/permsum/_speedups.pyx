# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot loops.

Exact twins of :mod:`permsum._kernels`; keep the two in lockstep.  The
callers' conservative 64-bit bound check makes unchecked ``long long``
arithmetic safe here.
"""

from array import array
from math import factorial

from libc.stdlib cimport free, malloc


def walk_sums(g, x):
    """All n! permutation sums in antilex walk order; see _kernels.walk_sums."""
    cdef Py_ssize_t n = len(g)
    cdef Py_ssize_t count = factorial(n)
    sums_arr = array("q", bytes(8 * count))
    cdef long long[::1] sums = sums_arr
    cdef long long* gv = <long long*> malloc(n * sizeof(long long))
    cdef long long* xv = <long long*> malloc(n * sizeof(long long))
    cdef long long* p = <long long*> malloc(n * sizeof(long long))
    if gv == NULL or xv == NULL or p == NULL:
        free(gv); free(xv); free(p)
        raise MemoryError()
    cdef Py_ssize_t i, j, t, lo, hi, mid, k
    cdef Py_ssize_t first_drop = -1
    cdef long long total = 0, prev, old, new, v, tmp
    try:
        for j in range(n):
            gv[j] = g[j]
            xv[j] = x[j]
            p[j] = n - j
        for j in range(n):
            total += gv[j] * xv[p[j] - 1]
        sums[0] = total
        prev = total
        for k in range(1, count):
            i = 1
            while p[i] > p[i - 1]:
                i += 1
            old = 0
            for j in range(i + 1):
                old += gv[j] * xv[p[j] - 1]
            v = p[i]
            # first prefix entry above v; the prefix is strictly increasing
            lo = 0
            hi = i
            while lo < hi:
                mid = (lo + hi) // 2
                if p[mid] < v:
                    lo = mid + 1
                else:
                    hi = mid
            t = lo
            tmp = p[t]
            p[t] = v
            p[i] = tmp
            # reverse the prefix into a strictly decreasing run
            lo = 0
            hi = i - 1
            while lo < hi:
                tmp = p[lo]
                p[lo] = p[hi]
                p[hi] = tmp
                lo += 1
                hi -= 1
            new = 0
            for j in range(i + 1):
                new += gv[j] * xv[p[j] - 1]
            total += new - old
            sums[k] = total
            if first_drop < 0 and total <= prev:
                first_drop = k
            prev = total
    finally:
        free(gv)
        free(xv)
        free(p)
    return sums_arr, first_drop


def first_duplicate(sums):
    """Earliest repeated value; see _kernels.first_duplicate."""
    cdef long long[::1] view = sums
    cdef Py_ssize_t k, count = view.shape[0]
    cdef long long s
    seen = {}
    for k in range(count):
        s = view[k]
        j = seen.setdefault(s, k)
        if j != k:
            return j, k
    return None


def prefix_feasible(g, Py_ssize_t k, subsets_flat, patterns_flat):
    """Forced-collision check for a weight prefix; see _kernels.prefix_feasible."""
    cdef long long[::1] subs = subsets_flat
    cdef long long[::1] pats = patterns_flat
    cdef Py_ssize_t n_subsets = subs.shape[0] // k
    cdef Py_ssize_t n_patterns = pats.shape[0] // k
    cdef long long* gv = <long long*> malloc(k * sizeof(long long))
    cdef long long* dots = <long long*> malloc(n_patterns * sizeof(long long))
    if gv == NULL or dots == NULL:
        free(gv); free(dots)
        raise MemoryError()
    cdef Py_ssize_t s, r, i, m, base, pat
    cdef long long total
    cdef bint ok = True
    try:
        for i in range(k):
            gv[i] = g[i]
        for s in range(n_subsets):
            base = s * k
            for r in range(n_patterns):
                pat = r * k
                total = 0
                for i in range(k):
                    total += gv[i] * subs[base + pats[pat + i]]
                for m in range(r):
                    if dots[m] == total:
                        ok = False
                        break
                if not ok:
                    break
                dots[r] = total
            if not ok:
                break
    finally:
        free(gv)
        free(dots)
    return ok
