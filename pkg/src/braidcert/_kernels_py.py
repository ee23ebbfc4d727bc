"""Pure-Python term-map kernels.

A term map is a dict from exponent to nonzero integer coefficient; one-variable
maps use ``int`` keys, two-variable maps use ``(int, int)`` keys.  These four
functions are the hot inner loops of every invariant computation and exist in
two twins with identical signatures: this module and the compiled
``_speedups`` extension.  Both must keep the no-zero-values invariant.
"""

BACKEND = "python"


def mul1(a, b):
    """Product of two one-variable term maps."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            c = out.get(e, 0) + ca * cb
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def mul2(a, b):
    """Product of two two-variable term maps (exponent pairs add)."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for (ia, ja), ca in a.items():
        for (ib, jb), cb in b.items():
            e = (ia + ib, ja + jb)
            c = out.get(e, 0) + ca * cb
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def iadd1(acc, src, shift, scale):
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


def iadd2(acc, src, shift_i, shift_j, scale):
    """In-place ``acc += scale * x**shift_i * y**shift_j * src`` for pair maps."""
    if not scale:
        return
    for (i, j), c in src.items():
        e2 = (i + shift_i, j + shift_j)
        c2 = acc.get(e2, 0) + scale * c
        if c2:
            acc[e2] = c2
        elif e2 in acc:
            del acc[e2]
