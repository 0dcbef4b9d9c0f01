"""Pure numpy versions of the search kernels.

Same contracts and visiting order as :mod:`homhom.kernels.jit`; candidate
targets for one vertex are filtered in a single vectorized pass instead of a
scalar loop.
"""

from collections import deque

import numpy as np

HOMO, MONO, ISO = 0, 1, 2
NONMEMBER, MEMBER, UNKNOWN = 0, 1, -1


def candidates(kind, leq, vc, ec, x, xs, ss, used):
    """Boolean mask over targets t such that x -> t is compatible with xs -> ss."""
    diag = np.diagonal(ec)
    if kind == ISO:
        ok = (vc == vc[x]) & (diag == ec[x, x])
    else:
        ok = leq[vc[x], vc] & leq[ec[x, x], diag]
    if kind != HOMO:
        ok &= ~used
    if len(xs):
        out_src = ec[x, xs]
        in_src = ec[xs, x]
        out_tgt = ec[:, ss]
        in_tgt = ec[ss, :].T
        if kind == ISO:
            ok &= np.all(out_tgt == out_src, axis=1) & np.all(in_tgt == in_src, axis=1)
        else:
            ok &= np.all(leq[out_src, out_tgt], axis=1) & np.all(leq[in_src, in_tgt], axis=1)
    return ok


def _fixed_ok(kind, leq, vc, ec, assign):
    n = len(vc)
    used = np.zeros(n, dtype=np.bool_)
    xs, ss = [], []
    for x in range(n):
        s = assign[x]
        if s < 0:
            continue
        if not candidates(kind, leq, vc, ec, x, np.array(xs, np.int64), np.array(ss, np.int64), used)[s]:
            return None
        if kind != HOMO:
            used[s] = True
        xs.append(x)
        ss.append(s)
    return used


def extend(leq, vc, ec, assign, kind):
    n = len(vc)
    g = np.array(assign, dtype=np.int64)
    used = _fixed_ok(kind, leq, vc, ec, g)
    if used is None:
        return g, False
    free = np.flatnonzero(g < 0)

    def rec(depth):
        if depth == len(free):
            return True
        x = free[depth]
        xs = np.flatnonzero(g >= 0)
        mask = candidates(kind, leq, vc, ec, x, xs, g[xs], used)
        for t in np.flatnonzero(mask):
            g[x] = t
            if kind != HOMO:
                used[t] = True
            if rec(depth + 1):
                return True
            if kind != HOMO:
                used[t] = False
        g[x] = -1
        return False

    return g, rec(0)


def iter_partial(leq, vc, ec, kind, k):
    """Partial ``kind``-morphisms with domain size ``k``, in lexicographic order of sorted pairs.

    Yields ``(dom, img)`` tuples.
    """
    n = len(vc)
    if k == 0:
        yield (), ()
        return
    dom = []
    img = []
    used = np.zeros(n, dtype=np.bool_)

    def rec(level):
        lo = dom[-1] + 1 if dom else 0
        for d in range(lo, n - (k - level) + 1):
            mask = candidates(kind, leq, vc, ec, d, np.array(dom, np.int64), np.array(img, np.int64), used)
            for t in np.flatnonzero(mask).tolist():
                dom.append(d)
                img.append(t)
                if kind != HOMO:
                    used[t] = True
                if level == k - 1:
                    yield tuple(dom), tuple(img)
                else:
                    yield from rec(level + 1)
                dom.pop()
                img.pop()
                if kind != HOMO:
                    used[t] = False

    yield from rec(0)


def decide(leq, vc, ec, src, tgt, budget, cache_size):
    n = len(vc)
    checked = 0
    cache = deque(maxlen=cache_size)
    empty = np.zeros(0, np.int64)
    for k in range(n + 1):
        for dom, img in iter_partial(leq, vc, ec, src, k):
            if budget >= 0 and checked >= budget:
                return UNKNOWN, empty, empty, checked
            checked += 1
            d = np.array(dom, np.int64)
            i = np.array(img, np.int64)
            if k and any(np.array_equal(g[d], i) for g in cache):
                continue
            assign = np.full(n, -1, np.int64)
            assign[d] = i
            g, ok = extend(leq, vc, ec, assign, tgt)
            if not ok:
                return NONMEMBER, d, i, checked
            cache.append(g)
    return MEMBER, empty, empty, checked


def canonical_mask(codes, posperms):
    m = codes.shape[0]
    out = np.ones(m, dtype=np.bool_)
    rows = np.arange(m)
    for perm in posperms:
        diff = codes[:, perm] - codes
        nz = diff != 0
        first = np.argmax(nz, axis=1)
        less = nz[rows, first] & (diff[rows, first] < 0)
        out &= ~less
    return out
