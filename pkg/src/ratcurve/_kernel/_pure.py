"""Reference implementation of the reduction hot loop.

A kernel polynomial is a list of (key, exps, coeff) triples sorted by key
descending, where key is the packed integer monomial key of the active order
(see orders.py). Keys are additive under monomial multiplication, so shifted
keys never need recomputation. `_fast.pyx` is the compiled twin of this
module; both must stay behaviorally identical.
"""

from __future__ import annotations


def scale_shift(g: list, dk: int, de: tuple, c) -> list:
    """c * x^de * g, key shift dk precomputed by the caller."""
    out = []
    for k, e, a in g:
        out.append((k + dk, tuple(x + y for x, y in zip(e, de)), a * c))
    return out


def merge_sub(p: list, q: list) -> list:
    """p - q for sorted term lists; cancellations removed."""
    out = []
    i = j = 0
    np_, nq = len(p), len(q)
    while i < np_ and j < nq:
        kp = p[i][0]
        kq = q[j][0]
        if kp > kq:
            out.append(p[i])
            i += 1
        elif kp < kq:
            k, e, c = q[j]
            out.append((k, e, -c))
            j += 1
        else:
            c = p[i][2] - q[j][2]
            if c != 0:
                out.append((kp, p[i][1], c))
            i += 1
            j += 1
    if i < np_:
        out.extend(p[i:])
    while j < nq:
        k, e, c = q[j]
        out.append((k, e, -c))
        j += 1
    return out


def normal_form(p: list, basis: list, full: bool = True) -> list:
    """Remainder of p modulo the basis (list of nonzero kernel polys).

    With full=True every term of the result is irreducible; with full=False
    reduction stops as soon as the leading term is irreducible.
    """
    if not p:
        return p
    head: list = []
    cur = p
    while cur:
        k0, e0, c0 = cur[0]
        red = None
        for g in basis:
            ge = g[0][1]
            ok = True
            for a, b in zip(ge, e0):
                if a > b:
                    ok = False
                    break
            if ok:
                red = g
                break
        if red is None:
            if not full:
                head.extend(cur)
                return head
            head.append(cur[0])
            cur = cur[1:]
        else:
            gk, ge, gc = red[0]
            fac = c0 / gc
            if len(red) > 1:
                dk = k0 - gk
                de = tuple(a - b for a, b in zip(e0, ge))
                cur = merge_sub(cur[1:], scale_shift(red[1:], dk, de, fac))
            else:
                cur = cur[1:]
    return head
