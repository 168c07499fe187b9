# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled word kernels.  Same functions and results as ``_pykernels``."""

from libc.stdlib cimport calloc, free, malloc


def canonical(word):
    cdef Py_ssize_t n = len(word), k
    cdef long c, v, vmax = 0
    for k in range(n):
        c = word[k]
        v = (c + 1) >> 1
        if v > vmax:
            vmax = v
    cdef char *seen = <char *>calloc(vmax + 1, 1)
    if seen == NULL:
        raise MemoryError()
    out = list(word)
    try:
        for k in range(n):
            c = out[k]
            v = (c + 1) >> 1
            if not seen[v]:
                seen[v] = 1
                out[k] = v << 1
    finally:
        free(seen)
    return tuple(out)


def standard_labels(word):
    cdef Py_ssize_t n = len(word), k
    cdef long c, v, vmax = 0
    cdef long *codes = <long *>malloc((n + 1) * sizeof(long))
    if codes == NULL:
        raise MemoryError()
    for k in range(n):
        codes[k] = word[k]
        v = (codes[k] + 1) >> 1
        if v > vmax:
            vmax = v
    cdef long *nxt = <long *>calloc(2 * vmax + 2, sizeof(long))
    cdef long *labels = <long *>malloc((n + 1) * sizeof(long))
    if nxt == NULL or labels == NULL:
        free(codes)
        free(nxt)
        free(labels)
        raise MemoryError()
    cdef long run = 1, slot
    try:
        # nxt[2v-1]: next label for primed v, nxt[2v]: for unprimed v;
        # slot order equals the code order, so one prefix sum suffices
        for k in range(n):
            nxt[codes[k]] += 1
        for slot in range(1, 2 * vmax + 1):
            c = nxt[slot]
            nxt[slot] = run
            run += c
        for k in range(n - 1, -1, -1):
            if codes[k] & 1:
                labels[k] = nxt[codes[k]]
                nxt[codes[k]] += 1
        for k in range(n):
            if not codes[k] & 1:
                labels[k] = nxt[codes[k]]
                nxt[codes[k]] += 1
        return tuple([labels[k] for k in range(n)])
    finally:
        free(codes)
        free(nxt)
        free(labels)


def destandardize(labels, weight):
    cdef Py_ssize_t size = len(labels), k, a, t, m, start, nv = len(weight), v
    cdef long total = 0
    for v in range(nv):
        total += weight[v]
    if total != size:
        return None
    cdef long *pos = <long *>malloc((size + 1) * sizeof(long))
    cdef long *out = <long *>malloc((size + 1) * sizeof(long))
    if pos == NULL or out == NULL:
        free(pos)
        free(out)
        raise MemoryError()
    cdef long best
    try:
        for k in range(size):
            pos[<long>labels[k]] = k
        start = 1
        for v in range(nv):
            m = weight[v]
            if m == 0:
                continue
            t = 0
            best = pos[start]
            for a in range(1, m):
                if pos[start + a] < best:
                    best = pos[start + a]
                    t = a
            for a in range(t - 1):
                if pos[start + a] < pos[start + a + 1]:
                    return None
            for a in range(t, m - 1):
                if pos[start + a] > pos[start + a + 1]:
                    return None
            for a in range(m):
                out[pos[start + a]] = 2 * (v + 1) - 1 if a < t else 2 * (v + 1)
            start += m
        return tuple([out[k] for k in range(size)])
    finally:
        free(pos)
        free(out)


cdef inline void _walk(int *s, Py_ssize_t n, int *xs, int *ys):
    cdef int x = 0, y = 0, c
    cdef Py_ssize_t k
    xs[0] = 0
    ys[0] = 0
    for k in range(n):
        c = s[k]
        if x == 0 or y == 0:
            if c <= 2:
                x += 1
            else:
                y += 1
        elif c == 1:
            x += 1
        elif c == 2:
            y -= 1
        elif c == 3:
            x -= 1
        else:
            y += 1
        xs[k + 1] = x
        ys[k + 1] = y


def walk_end(sub):
    cdef int x = 0, y = 0, c
    for c in sub:
        if x == 0 or y == 0:
            if c <= 2:
                x += 1
            else:
                y += 1
        elif c == 1:
            x += 1
        elif c == 2:
            y -= 1
        elif c == 3:
            x -= 1
        else:
            y += 1
    return (x, y)


cdef inline int _at(int *s, Py_ssize_t k, int mask, Py_ssize_t f1, Py_ssize_t f2):
    cdef int c = s[k]
    if (k == f1 and mask & 1) or (k == f2 and mask & 2):
        return c + 1 if c & 1 else c - 1
    return c


cdef int _load(sub, int **out, Py_ssize_t *n, Py_ssize_t *f1, Py_ssize_t *f2) except -1:
    cdef Py_ssize_t k
    cdef int c
    n[0] = len(sub)
    out[0] = <int *>malloc((n[0] + 1) * sizeof(int))
    if out[0] == NULL:
        raise MemoryError()
    f1[0] = -1
    f2[0] = -1
    for k in range(n[0]):
        c = sub[k]
        out[0][k] = c
        if c <= 2:
            if f1[0] < 0:
                f1[0] = k
        elif f2[0] < 0:
            f2[0] = k
    return 0


cdef tuple _emit(int *s, Py_ssize_t n, int mask, Py_ssize_t f1, Py_ssize_t f2, Py_ssize_t k, Py_ssize_t j, int a, int b):
    cdef Py_ssize_t t
    res = [_at(s, t, mask, f1, f2) for t in range(n)]
    res[k] = a
    if b:
        res[j] = b
    return tuple(res)


cdef tuple _unprimed(sub, bint lower):
    cdef int *s = NULL
    cdef int *xs = NULL
    cdef int *ys = NULL
    cdef Py_ssize_t n, f1, f2, k, j, bestlen, blen, bj
    cdef int mask, c, x, y, kind, bkind, bmask
    _load(sub, &s, &n, &f1, &f2)
    try:
        xs = <int *>malloc((n + 1) * sizeof(int))
        ys = <int *>malloc((n + 1) * sizeof(int))
        if xs == NULL or ys == NULL:
            raise MemoryError()
        _walk(s, n, xs, ys)
        for k in range(n - 1, -1, -1):
            x = xs[k]
            y = ys[k]
            bestlen = 0
            bkind = 0
            bmask = 0
            bj = k
            for mask in range(4):
                if (mask & 1 and f1 < 0) or (mask & 2 and f2 < 0):
                    continue
                c = _at(s, k, mask, f1, f2)
                if lower:
                    if c == 2:
                        if y == 0 or (y == 1 and x >= 1):
                            j = k + 1
                            while j < n and _at(s, j, mask, f1, f2) == 1:
                                j += 1
                            if j < n and _at(s, j, mask, f1, f2) == 3 and j - k + 1 > bestlen:
                                bestlen, bkind, bmask, bj = j - k + 1, 1, mask, j
                        if x == 0 or (x == 1 and y >= 1):
                            j = k + 1
                            while j < n and _at(s, j, mask, f1, f2) == 4:
                                j += 1
                            if j < n and _at(s, j, mask, f1, f2) == 1 and j - k + 1 > bestlen:
                                bestlen, bkind, bmask, bj = j - k + 1, 2, mask, j
                        if y == 0 and bestlen < 1:
                            bestlen, bkind, bmask, bj = 1, 3, mask, k
                        if x == 1 and y >= 1 and bestlen < 1:
                            bestlen, bkind, bmask, bj = 1, 5, mask, k
                    elif c == 1:
                        if x == 0 and bestlen < 1:
                            bestlen, bkind, bmask, bj = 1, 4, mask, k
                    elif c == 3:
                        if x == 1 and y >= 1 and bestlen < 1:
                            bestlen, bkind, bmask, bj = 1, 5, mask, k
                else:
                    if c == 3:
                        if x == 0 or (x == 1 and y >= 1):
                            j = k + 1
                            while j < n and _at(s, j, mask, f1, f2) == 4:
                                j += 1
                            if j < n and _at(s, j, mask, f1, f2) == 2 and j - k + 1 > bestlen:
                                bestlen, bkind, bmask, bj = j - k + 1, 1, mask, j
                        if y == 0 or (y == 1 and x >= 1):
                            j = k + 1
                            while j < n and _at(s, j, mask, f1, f2) == 1:
                                j += 1
                            if j < n and _at(s, j, mask, f1, f2) == 4 and j - k + 1 > bestlen:
                                bestlen, bkind, bmask, bj = j - k + 1, 2, mask, j
                        if x == 0 and bestlen < 1:
                            bestlen, bkind, bmask, bj = 1, 3, mask, k
                        if y == 1 and x >= 1 and bestlen < 1:
                            bestlen, bkind, bmask, bj = 1, 5, mask, k
                    elif c == 4:
                        if y == 0 and bestlen < 1:
                            bestlen, bkind, bmask, bj = 1, 4, mask, k
                    elif c == 2:
                        if y == 1 and x >= 1 and bestlen < 1:
                            bestlen, bkind, bmask, bj = 1, 5, mask, k
            if bestlen == 0:
                continue
            if bkind == 5:
                return None
            if lower:
                if bkind == 1:
                    return _emit(s, n, bmask, f1, f2, k, bj, 3, 4)
                if bkind == 2:
                    return _emit(s, n, bmask, f1, f2, k, bj, 3, 2)
                if bkind == 3:
                    return _emit(s, n, bmask, f1, f2, k, k, 4, 0)
                return _emit(s, n, bmask, f1, f2, k, k, 3, 0)
            if bkind == 1:
                return _emit(s, n, bmask, f1, f2, k, bj, 2, 1)
            if bkind == 2:
                return _emit(s, n, bmask, f1, f2, k, bj, 2, 3)
            if bkind == 3:
                return _emit(s, n, bmask, f1, f2, k, k, 1, 0)
            return _emit(s, n, bmask, f1, f2, k, k, 2, 0)
        return None
    finally:
        free(s)
        free(xs)
        free(ys)


def lower_unprimed(sub):
    return _unprimed(sub, True)


def raise_unprimed(sub):
    return _unprimed(sub, False)


cdef tuple _primed(sub, bint lower):
    cdef int *s = NULL
    cdef Py_ssize_t n, f1, f2, k, last1, last2p
    cdef int mask, c
    _load(sub, &s, &n, &f1, &f2)
    try:
        for mask in range(4):
            if (mask & 1 and f1 < 0) or (mask & 2 and f2 < 0):
                continue
            last1 = -1
            last2p = -1
            for k in range(n):
                c = _at(s, k, mask, f1, f2)
                if c == 2:
                    last1 = k
                elif c == 3:
                    last2p = k
            if lower and last1 > last2p:
                return _emit(s, n, mask, f1, f2, last1, last1, 3, 0)
            if not lower and last2p > last1:
                return _emit(s, n, mask, f1, f2, last2p, last2p, 2, 0)
        return None
    finally:
        free(s)


def lower_primed(sub):
    return _primed(sub, True)


def raise_primed(sub):
    return _primed(sub, False)
