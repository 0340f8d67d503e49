# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of `_pure.py`; same contracts, same outputs.

Keys and coefficients stay Python objects (multi-word integers and exact
rationals), so the speedup comes from typed loop indices, index-based
cursors instead of list slicing, and C-level list assembly.
"""

cimport cython


def scale_shift(list g, dk, tuple de, c):
    """c * x^de * g, key shift dk precomputed by the caller."""
    cdef Py_ssize_t i, j, n = len(g), m = len(de)
    cdef list out = [None] * n
    cdef tuple item, e
    for i in range(n):
        item = <tuple> g[i]
        e = <tuple> item[1]
        out[i] = (
            item[0] + dk,
            tuple([e[j] + de[j] for j in range(m)]),
            item[2] * c,
        )
    return out


def merge_sub(list p, list q):
    """p - q for sorted term lists; cancellations removed."""
    cdef Py_ssize_t i = 0, j = 0, np_ = len(p), nq = len(q)
    cdef list out = []
    cdef tuple tp, tq
    while i < np_ and j < nq:
        tp = <tuple> p[i]
        tq = <tuple> q[j]
        if tp[0] > tq[0]:
            out.append(tp)
            i += 1
        elif tp[0] < tq[0]:
            out.append((tq[0], tq[1], -tq[2]))
            j += 1
        else:
            c = tp[2] - tq[2]
            if c != 0:
                out.append((tp[0], tp[1], c))
            i += 1
            j += 1
    if i < np_:
        out.extend(p[i:])
    while j < nq:
        tq = <tuple> q[j]
        out.append((tq[0], tq[1], -tq[2]))
        j += 1
    return out


cdef inline bint _divides(tuple ge, tuple e0):
    cdef Py_ssize_t i, n = len(ge)
    for i in range(n):
        if <object> ge[i] > <object> e0[i]:
            return False
    return True


def normal_form(list p, list basis, bint full=True):
    """Remainder of p modulo the basis (list of nonzero kernel polys)."""
    if not p:
        return p
    cdef list head = []
    cdef list cur = p
    cdef Py_ssize_t pos = 0, bi, nb = len(basis)
    cdef list red, g
    cdef tuple lead, glead, e0, ge, de
    while pos < len(cur):
        lead = <tuple> cur[pos]
        e0 = <tuple> lead[1]
        red = None
        for bi in range(nb):
            g = <list> basis[bi]
            glead = <tuple> g[0]
            if _divides(<tuple> glead[1], e0):
                red = g
                break
        if red is None:
            if not full:
                head.extend(cur[pos:])
                return head
            head.append(lead)
            pos += 1
        else:
            glead = <tuple> red[0]
            fac = lead[2] / glead[2]
            if len(red) > 1:
                ge = <tuple> glead[1]
                de = tuple([e0[i] - ge[i] for i in range(len(e0))])
                cur = merge_sub(
                    cur[pos + 1 :],
                    scale_shift(red[1:], lead[0] - glead[0], de, fac),
                )
            else:
                cur = cur[pos + 1 :]
            pos = 0
    return head
