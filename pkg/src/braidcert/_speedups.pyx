# cython: language_level=3
"""Compiled term-map kernels; twin of ``_kernels_py`` (same signatures)."""

BACKEND = "c"


def mul1(dict a, dict b):
    """Product of two one-variable term maps."""
    cdef dict out = {}
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            c = out.get(e, 0) + ca * cb
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def mul2(dict a, dict b):
    """Product of two two-variable term maps (exponent pairs add)."""
    cdef dict out = {}
    if len(a) > len(b):
        a, b = b, a
    for ka, ca in a.items():
        ia, ja = ka
        for kb, cb in b.items():
            ib, jb = kb
            e = (ia + ib, ja + jb)
            c = out.get(e, 0) + ca * cb
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def iadd1(dict acc, dict src, shift, scale):
    """In-place ``acc += scale * x**shift * src`` for one-variable maps."""
    if not scale:
        return
    for e, c in src.items():
        e2 = e + shift
        c2 = acc.get(e2, 0) + scale * c
        if c2:
            acc[e2] = c2
        elif e2 in acc:
            del acc[e2]


def iadd2(dict acc, dict src, shift_i, shift_j, scale):
    """In-place ``acc += scale * x**shift_i * y**shift_j * src`` for pair maps."""
    if not scale:
        return
    for k, c in src.items():
        i, j = k
        e2 = (i + shift_i, j + shift_j)
        c2 = acc.get(e2, 0) + scale * c
        if c2:
            acc[e2] = c2
        elif e2 in acc:
            del acc[e2]
