"""numba-compiled search kernels.

All kernels work on raw arrays: ``leq`` (k x k bool), ``vc`` (n,) int64 and
``ec`` (n x n) int64 holding poset indices.  Morphism kinds are the integers
HOMO, MONO, ISO.  Iteration order is ascending in every loop so results match
the numpy fallback exactly.
"""

import numpy as np
from numba import njit

HOMO, MONO, ISO = 0, 1, 2
NONMEMBER, MEMBER, UNKNOWN = 0, 1, -1


@njit(cache=True)
def _vertex_ok(kind, leq, vc, ec, x, s):
    if kind == ISO:
        return vc[x] == vc[s] and ec[x, x] == ec[s, s]
    return leq[vc[x], vc[s]] and leq[ec[x, x], ec[s, s]]


@njit(cache=True)
def _pair_ok(kind, leq, ec, x, s, y, t):
    # x != y
    if kind == ISO:
        return s != t and ec[x, y] == ec[s, t] and ec[y, x] == ec[t, s]
    if kind == MONO and s == t:
        return False
    return leq[ec[x, y], ec[s, t]] and leq[ec[y, x], ec[t, s]]


@njit(cache=True)
def extend(leq, vc, ec, assign, kind):
    """First total ``kind``-endomorphism agreeing with ``assign`` (-1 = free).

    Returns ``(g, found)``.
    """
    n = vc.shape[0]
    g = assign.copy()
    used = np.zeros(n, np.bool_)
    injective = kind != HOMO
    for x in range(n):
        s = g[x]
        if s < 0:
            continue
        if injective:
            if used[s]:
                return g, False
            used[s] = True
        if not _vertex_ok(kind, leq, vc, ec, x, s):
            return g, False
        for y in range(x):
            if g[y] >= 0 and not _pair_ok(kind, leq, ec, x, s, y, g[y]):
                return g, False
    m = 0
    free = np.empty(n, np.int64)
    for x in range(n):
        if g[x] < 0:
            free[m] = x
            m += 1
    if m == 0:
        return g, True
    cand = np.zeros(m, np.int64)
    depth = 0
    while depth >= 0:
        x = free[depth]
        if g[x] >= 0:
            if injective:
                used[g[x]] = False
            g[x] = -1
        t = cand[depth]
        while t < n:
            if (not injective or not used[t]) and _vertex_ok(kind, leq, vc, ec, x, t):
                ok = True
                for y in range(n):
                    if y != x and g[y] >= 0 and not _pair_ok(kind, leq, ec, x, t, y, g[y]):
                        ok = False
                        break
                if ok:
                    break
            t += 1
        if t < n:
            g[x] = t
            if injective:
                used[t] = True
            cand[depth] = t + 1
            depth += 1
            if depth == m:
                return g, True
            cand[depth] = 0
        else:
            cand[depth] = 0
            depth -= 1
    return g, False


@njit(cache=True)
def _source_ok(kind, leq, vc, ec, d, t, dom, img, level):
    if not _vertex_ok(kind, leq, vc, ec, d, t):
        return False
    for i in range(level):
        if not _pair_ok(kind, leq, ec, d, t, dom[i], img[i]):
            return False
    return True


@njit(cache=True)
def decide(leq, vc, ec, src, tgt, budget, cache_size):
    """Search for a partial ``src``-morphism with no total ``tgt`` extension.

    Maps are visited by domain size, then lexicographically on the sorted
    (source, target) pairs, so the first failure is the minimal witness.
    Returns ``(status, dom, img, checked)``.
    """
    n = vc.shape[0]
    checked = 0
    dom = np.zeros(n, np.int64)
    img = np.zeros(n, np.int64)
    next_c = np.zeros(n + 1, np.int64)
    assign = np.full(n, -1, np.int64)
    cache = np.empty((cache_size, n), np.int64)
    n_cached = 0
    head = 0
    empty = np.zeros(0, np.int64)
    for k in range(n + 1):
        if k == 0:
            if budget >= 0 and checked >= budget:
                return UNKNOWN, empty, empty, checked
            checked += 1
            g, ok = extend(leq, vc, ec, assign, tgt)
            if not ok:
                return NONMEMBER, empty, empty, checked
            continue
        level = 0
        next_c[0] = 0
        while level >= 0:
            if next_c[level] > 0:
                assign[dom[level]] = -1
            lo = dom[level - 1] + 1 if level > 0 else 0
            c = next_c[level]
            if c < lo * n:
                c = lo * n
            hi = (n - (k - level)) * n + n
            found = False
            while c < hi:
                d = c // n
                t = c - d * n
                if _source_ok(src, leq, vc, ec, d, t, dom, img, level):
                    found = True
                    break
                c += 1
            if not found:
                next_c[level] = 0
                level -= 1
                continue
            dom[level] = d
            img[level] = t
            assign[d] = t
            next_c[level] = c + 1
            if level < k - 1:
                level += 1
                next_c[level] = 0
                continue
            if budget >= 0 and checked >= budget:
                return UNKNOWN, empty, empty, checked
            checked += 1
            hit = False
            for r in range(n_cached):
                same = True
                for i in range(k):
                    if cache[r, dom[i]] != img[i]:
                        same = False
                        break
                if same:
                    hit = True
                    break
            if hit:
                continue
            g, ok = extend(leq, vc, ec, assign, tgt)
            if not ok:
                return NONMEMBER, dom[:k].copy(), img[:k].copy(), checked
            cache[head] = g
            head = (head + 1) % cache_size
            if n_cached < cache_size:
                n_cached += 1
        for i in range(n):
            assign[i] = -1
    return MEMBER, empty, empty, checked


@njit(cache=True)
def canonical_mask(codes, posperms):
    """Rows of ``codes`` that are lexicographically minimal under every position permutation."""
    m, npos = codes.shape
    out = np.ones(m, np.bool_)
    for r in range(m):
        for p in range(posperms.shape[0]):
            for q in range(npos):
                a = codes[r, posperms[p, q]]
                b = codes[r, q]
                if a < b:
                    out[r] = False
                    break
                if a > b:
                    break
            if not out[r]:
                break
    return out
