# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; semantics mirror ``pure.py`` exactly."""

from libc.stdlib cimport free, malloc
from libc.string cimport memcmp, memcpy


def reduce_handles(word):
    """Fully handle-reduce a braid word (letters are nonzero ints)."""
    cdef Py_ssize_t L = len(word)
    cdef Py_ssize_t cap = 16 + 4 * L
    cdef int *w = <int *> malloc(cap * sizeof(int))
    cdef int *buf = <int *> malloc(cap * sizeof(int))
    cdef int *last = NULL
    cdef int *tmp
    cdef Py_ssize_t m = 0, new_m, s, t, i, j
    cdef int k, e, a, d, maxg = 1
    cdef bint found, ok
    if w == NULL or buf == NULL:
        if w != NULL:
            free(w)
        if buf != NULL:
            free(buf)
        raise MemoryError()
    try:
        for v in word:
            w[m] = v
            if w[m] > maxg:
                maxg = w[m]
            elif -w[m] > maxg:
                maxg = -w[m]
            m += 1
        last = <int *> malloc((maxg + 2) * sizeof(int))
        if last == NULL:
            raise MemoryError()
        while True:
            # find the earliest-closing handle
            for i in range(maxg + 2):
                last[i] = -1
            found = False
            s = 0
            t = 0
            for t in range(m):
                k = w[t] if w[t] > 0 else -w[t]
                s = last[k]
                if s >= 0 and w[s] == -w[t]:
                    ok = True
                    for i in range(s + 1, t):
                        a = w[i] if w[i] > 0 else -w[i]
                        if a == k - 1:
                            ok = False
                            break
                    if ok:
                        found = True
                        break
                last[k] = t
            if not found:
                return tuple([w[i] for i in range(m)])
            # rewrite: prefix, transformed interior, suffix into buf
            k = w[s] if w[s] > 0 else -w[s]
            e = 1 if w[s] > 0 else -1
            new_m = m - 2
            for i in range(s + 1, t):
                a = w[i] if w[i] > 0 else -w[i]
                if a == k + 1:
                    new_m += 2
            if new_m > cap:
                cap = 2 * new_m + 16
                tmp = <int *> malloc(cap * sizeof(int))
                if tmp == NULL:
                    raise MemoryError()
                memcpy(tmp, w, m * sizeof(int))
                free(w)
                w = tmp
                tmp = <int *> malloc(cap * sizeof(int))
                if tmp == NULL:
                    raise MemoryError()
                free(buf)
                buf = tmp
            memcpy(buf, w, s * sizeof(int))
            j = s
            for i in range(s + 1, t):
                a = w[i] if w[i] > 0 else -w[i]
                if a == k + 1:
                    d = 1 if w[i] > 0 else -1
                    buf[j] = -e * (k + 1)
                    buf[j + 1] = d * k
                    buf[j + 2] = e * (k + 1)
                    j += 3
                else:
                    buf[j] = w[i]
                    j += 1
            for i in range(t + 1, m):
                buf[j] = w[i]
                j += 1
            m = j
            tmp = w
            w = buf
            buf = tmp
    finally:
        free(w)
        free(buf)
        if last != NULL:
            free(last)


cdef bytes _canon(int n, int *x, int *o):
    cdef unsigned char *best = <unsigned char *> malloc(2 * n)
    cdef unsigned char *cand = <unsigned char *> malloc(2 * n)
    cdef int dr, dc, c
    cdef bint first = True
    if best == NULL or cand == NULL:
        if best != NULL:
            free(best)
        if cand != NULL:
            free(cand)
        raise MemoryError()
    try:
        for dr in range(n):
            for dc in range(n):
                for c in range(n):
                    cand[c] = <unsigned char> ((x[(c + dc) % n] + dr) % n)
                    cand[n + c] = <unsigned char> ((o[(c + dc) % n] + dr) % n)
                if first or memcmp(cand, best, 2 * n) < 0:
                    memcpy(best, cand, 2 * n)
                    first = False
        return (<char *> best)[:2 * n]
    finally:
        free(best)
        free(cand)


def grid_canon_key(int n, x, o):
    """Minimal serialization of (x, o) over all torus translations."""
    cdef int *cx = <int *> malloc(2 * n * sizeof(int))
    cdef int c
    if cx == NULL:
        raise MemoryError()
    try:
        for c in range(n):
            cx[c] = x[c]
            cx[n + c] = o[c]
        return _canon(n, cx, cx + n)
    finally:
        free(cx)


cdef bint _pair_commutes(int a1, int b1, int a2, int b2):
    cdef int lo1, hi1, lo2, hi2
    if a1 == a2 or a1 == b2 or b1 == a2 or b1 == b2:
        return False
    lo1, hi1 = (a1, b1) if a1 < b1 else (b1, a1)
    lo2, hi2 = (a2, b2) if a2 < b2 else (b2, a2)
    if hi1 < lo2 or hi2 < lo1:
        return True
    return (lo1 < lo2 and hi2 < hi1) or (lo2 < lo1 and hi1 < hi2)


def grid_class_neighbors(int n, bytes key):
    """Canonical keys of all commutation neighbors of a translation class."""
    cdef const unsigned char *kb = key
    cdef int *x = <int *> malloc(6 * n * sizeof(int))
    cdef int *o
    cdef int *x2
    cdef int *o2
    cdef int *x_inv
    cdef int *o_inv
    cdef int r, s, c, d, i
    cdef set out = set()
    if x == NULL:
        raise MemoryError()
    o = x + n
    x2 = x + 2 * n
    o2 = x + 3 * n
    x_inv = x + 4 * n
    o_inv = x + 5 * n
    try:
        for i in range(n):
            x[i] = kb[i]
            o[i] = kb[n + i]
        for i in range(n):
            x_inv[x[i]] = i
            o_inv[o[i]] = i
        for r in range(n):
            s = (r + 1) % n
            if _pair_commutes(x_inv[r], o_inv[r], x_inv[s], o_inv[s]):
                for i in range(n):
                    x2[i] = s if x[i] == r else (r if x[i] == s else x[i])
                    o2[i] = s if o[i] == r else (r if o[i] == s else o[i])
                out.add(_canon(n, x2, o2))
        for c in range(n):
            d = (c + 1) % n
            if _pair_commutes(x[c], o[c], x[d], o[d]):
                for i in range(n):
                    x2[i] = x[i]
                    o2[i] = o[i]
                x2[c], x2[d] = x2[d], x2[c]
                o2[c], o2[d] = o2[d], o2[c]
                out.add(_canon(n, x2, o2))
        return sorted(out)
    finally:
        free(x)
