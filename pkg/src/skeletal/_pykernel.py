"""Pure-Python flag-orbit kernel (fallback for the compiled ``_kernel``)."""

from collections import deque

import numpy as np

from .errors import CapExceeded


def _compose(a, b):
    # rows are (p0, p1, p2, s0, s1, s2, t0, t1, t2); apply a, then b
    pa, sa = a[0:3], a[3:6]
    pb, sb = b[0:3], b[3:6]
    ta = a[6:9]
    return (
        pa[pb[0]], pa[pb[1]], pa[pb[2]],
        sb[0] * sa[pb[0]], sb[1] * sa[pb[1]], sb[2] * sa[pb[2]],
        sb[0] * ta[pb[0]] + b[6], sb[1] * ta[pb[1]] + b[7], sb[2] * ta[pb[2]] + b[8],
    )


def _apply(g, p):
    return (
        g[3] * p[g[0]] + g[6],
        g[4] * p[g[1]] + g[7],
        g[5] * p[g[2]] + g[8],
    )


def _key(g):
    lin = (g[0], g[1], g[2], g[3], g[4], g[5])
    return (lin, g[6], g[7], g[8])


def canonical_cycle(pts):
    """Least rotation or reversal of a cyclic point sequence."""
    n = len(pts)
    rev = pts[::-1]
    best = None
    for seq in (pts, rev):
        for i in range(n):
            cand = seq[i:] + seq[:i]
            if best is None or cand < best:
                best = cand
    return best


def canonical_zigzag(a, b, a2):
    """Canonical (period, start, next) for the zigzag ... a, b, a2=a+t, ..."""
    t = (a2[0] - a[0], a2[1] - a[1], a2[2] - a[2])
    if t < (0, 0, 0):
        # reverse direction: ... b, a, b - t ...
        t = (-t[0], -t[1], -t[2])
        a, b = b, a
    tt = t[0] * t[0] + t[1] * t[1] + t[2] * t[2]
    cands = []
    for start, nxt in ((a, b), (b, (a[0] + t[0], a[1] + t[1], a[2] + t[2]))):
        k = (start[0] * t[0] + start[1] * t[1] + start[2] * t[2]) // tt
        cands.append((
            (start[0] - k * t[0], start[1] - k * t[1], start[2] - k * t[2]),
            (nxt[0] - k * t[0], nxt[1] - k * t[1], nxt[2] - k * t[2]),
        ))
    s, n = min(cands)
    return (t, s, n)


def flag_orbit(gens, base, twin, seed, zigzag, bound, cap):
    """Enumerate base-flag images whose vertex lies in the box ``|x|_inf <= bound``.

    ``gens`` are rows ``(perm, signs, translation)``; a group element ``g``
    has neighbours ``s g`` for every generator ``s`` (the i-adjacent flags).
    Visited elements are deduplicated exactly. Returns integer arrays of
    vertex images, twin images and canonical face images, one row per element.
    """
    gens = [tuple(int(v) for v in row) for row in gens]
    base = tuple(int(v) for v in base)
    twin = tuple(int(v) for v in twin)
    seed = [tuple(int(v) for v in p) for p in seed]
    ident = (0, 1, 2, 1, 1, 1, 0, 0, 0)
    seen = {_key(ident)}
    queue = deque([ident])
    verts, twins, faces = [], [], []
    while queue:
        g = queue.popleft()
        verts.append(_apply(g, base))
        twins.append(_apply(g, twin))
        imgs = [_apply(g, p) for p in seed]
        if zigzag:
            faces.append(canonical_zigzag(*imgs))
        else:
            faces.append(tuple(canonical_cycle(imgs)))
        for s in gens:
            h = _compose(s, g)
            k = _key(h)
            if k in seen:
                continue
            v = _apply(h, base)
            if max(abs(v[0]), abs(v[1]), abs(v[2])) > bound:
                continue
            seen.add(k)
            if len(seen) > cap:
                raise CapExceeded(f"flag orbit exceeded {cap} elements")
            queue.append(h)
    m = 3 if zigzag else len(seed)
    return (
        np.array(verts, dtype=np.int64).reshape(-1, 3),
        np.array(twins, dtype=np.int64).reshape(-1, 3),
        np.array(faces, dtype=np.int64).reshape(-1, m, 3),
    )
