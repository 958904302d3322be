# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled flag-orbit kernel; same contract as ``_pykernel.flag_orbit``.

Group elements are packed into 9 C longs (perm, signs, translation) and
deduplicated through a Python set of bytes keys.
"""

import numpy as np

from .errors import CapExceeded


cdef inline void _compose(const long* a, const long* b, long* out) noexcept:
    # apply a, then b
    cdef int k, j
    for k in range(3):
        j = b[k]
        out[k] = a[j]
        out[3 + k] = b[3 + k] * a[3 + j]
        out[6 + k] = b[3 + k] * a[6 + j] + b[6 + k]


cdef inline void _apply(const long* g, const long* p, long* out) noexcept:
    cdef int k
    for k in range(3):
        out[k] = g[3 + k] * p[g[k]] + g[6 + k]


cdef int _cmp_cycle(const long* P, int n, int start, int step, int best_start, int best_step) noexcept:
    # compare the cyclic reading (start, step) against (best_start, best_step)
    cdef int i, k, a, c
    for i in range(n):
        a = ((start + step * i) % n + n) % n
        c = ((best_start + best_step * i) % n + n) % n
        for k in range(3):
            if P[3 * a + k] != P[3 * c + k]:
                return -1 if P[3 * a + k] < P[3 * c + k] else 1
    return 0


cdef void _canonical_cycle(const long* P, int n, long* out) noexcept:
    """Least rotation or reversal of the cyclic sequence of ``n`` points."""
    cdef int bs = 0, bd = 1, s, d, i, a, k
    for d in (1, -1):
        for s in range(n):
            if _cmp_cycle(P, n, s, d, bs, bd) < 0:
                bs = s
                bd = d
    for i in range(n):
        a = ((bs + bd * i) % n + n) % n
        for k in range(3):
            out[3 * i + k] = P[3 * a + k]


cdef void _canonical_zigzag(const long* P, long* out) noexcept:
    """(period, start, next) normal form of the zigzag P[0], P[1], P[2] = P[0] + t."""
    cdef long t[3]
    cdef long a[3]
    cdef long b[3]
    cdef long c[6]
    cdef long d[6]
    cdef long tt, kk
    cdef int k, neg = 0
    for k in range(3):
        t[k] = P[6 + k] - P[k]
        a[k] = P[k]
        b[k] = P[3 + k]
    for k in range(3):
        if t[k] != 0:
            neg = t[k] < 0
            break
    if neg:
        for k in range(3):
            t[k] = -t[k]
            a[k], b[k] = b[k], a[k]
    tt = t[0] * t[0] + t[1] * t[1] + t[2] * t[2]
    kk = (a[0] * t[0] + a[1] * t[1] + a[2] * t[2]) // tt  # floor: cdivision is off
    for k in range(3):
        c[k] = a[k] - kk * t[k]
        c[3 + k] = b[k] - kk * t[k]
    kk = (b[0] * t[0] + b[1] * t[1] + b[2] * t[2]) // tt
    for k in range(3):
        d[k] = b[k] - kk * t[k]
        d[3 + k] = a[k] + t[k] - kk * t[k]
    cdef long* best = c
    for k in range(6):
        if d[k] != c[k]:
            if d[k] < c[k]:
                best = d
            break
    for k in range(3):
        out[k] = t[k]
    for k in range(6):
        out[3 + k] = best[k]


def flag_orbit(gens, base, twin, seed, zigzag, long bound, long cap):
    cdef int ngen = len(gens)
    cdef int nseed = len(seed)
    cdef long[:, ::1] G = np.ascontiguousarray(np.array(gens, dtype=np.int64).reshape(ngen, 9))
    cdef long[:, ::1] S = np.ascontiguousarray(np.array(seed, dtype=np.int64).reshape(nseed, 3))
    cdef long b[3]
    cdef long w[3]
    cdef long h[9]
    cdef long v[3]
    cdef long q[3]
    cdef int i, k, s
    cdef long head = 0, count = 1, m
    for k in range(3):
        b[k] = base[k]
        w[k] = twin[k]

    # element storage grows by doubling
    cdef long capacity = 1024
    elems_arr = np.zeros((capacity, 9), dtype=np.int64)
    cdef long[:, ::1] E = elems_arr
    E[0, 0] = 0; E[0, 1] = 1; E[0, 2] = 2
    E[0, 3] = 1; E[0, 4] = 1; E[0, 5] = 1
    seen = {bytes(elems_arr[0])}

    while head < count:
        for s in range(ngen):
            _compose(&G[s, 0], &E[head, 0], h)
            _apply(h, b, v)
            m = max(abs(v[0]), abs(v[1]), abs(v[2]))
            if m > bound:
                continue
            key = (<char*>h)[:9 * sizeof(long)]
            if key in seen:
                continue
            seen.add(key)
            if count >= cap:
                raise CapExceeded(f"flag orbit exceeded {cap} elements")
            if count == capacity:
                capacity *= 2
                elems_arr = np.resize(elems_arr, (capacity, 9))
                E = elems_arr
            for k in range(9):
                E[count, k] = h[k]
            count += 1
        head += 1

    verts = np.empty((count, 3), dtype=np.int64)
    twins = np.empty((count, 3), dtype=np.int64)
    cdef long[:, ::1] V = verts
    cdef long[:, ::1] W = twins
    img = np.empty((nseed, 3), dtype=np.int64)
    cdef long[:, ::1] I = img
    cdef bint zz = bool(zigzag)
    faces = np.empty((count, 3 if zz else nseed, 3), dtype=np.int64)
    cdef long[:, :, ::1] F = faces
    for i in range(count):
        _apply(&E[i, 0], b, &V[i, 0])
        _apply(&E[i, 0], w, &W[i, 0])
        for k in range(nseed):
            _apply(&E[i, 0], &S[k, 0], &I[k, 0])
        if zz:
            _canonical_zigzag(&I[0, 0], &F[i, 0, 0])
        else:
            _canonical_cycle(&I[0, 0], nseed, &F[i, 0, 0])
    return verts, twins, faces
