"""Dense polynomial arithmetic over a number field Q[u]/(h), h irreducible.

Elements of the field are dense ascending rational coefficient lists reduced
mod h; polynomials over the field are lists of such elements (index = degree).
Everything here assumes h irreducible, so every nonzero element is invertible
and gcds are honest field gcds.
"""

from __future__ import annotations

from .binary_forms import _u_divmod, _u_mul
from .rationals import ONE, QQ


def _u_trimmed(a):
    a = [QQ(c) for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _u_ext_gcd(a, b):
    """(g, s, t) over Q with s*a + t*b = g, g monic (or empty for 0,0)."""
    r0, r1 = _u_trimmed(a), _u_trimmed(b)
    s0, s1 = [ONE], []
    t0, t1 = [], [ONE]

    def sub(x, y):
        n = max(len(x), len(y))
        out = [
            (x[i] if i < len(x) else QQ(0)) - (y[i] if i < len(y) else QQ(0))
            for i in range(n)
        ]
        while out and out[-1] == 0:
            out.pop()
        return out

    while r1:
        q, r = _u_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, _u_mul(q, s1))
        t0, t1 = t1, sub(t0, _u_mul(q, t1))
    if not r0:
        return [], s0, t0
    lead = r0[-1]
    return (
        [c / lead for c in r0],
        [c / lead for c in s0],
        [c / lead for c in t0],
    )


def inverse_mod(a, h):
    """Inverse of a nonzero element of Q[u]/(h)."""
    g, s, _ = _u_ext_gcd(a, h)
    if len(g) != 1:
        raise ZeroDivisionError("element shares a factor with the modulus")
    return _u_divmod(s, list(h))[1]


def _e_mul(a, b, h):
    if not a or not b:
        return []
    return _u_divmod(_u_mul(a, b), list(h))[1]


def _e_sub(a, b):
    n = max(len(a), len(b))
    out = [
        (a[i] if i < len(a) else QQ(0)) - (b[i] if i < len(b) else QQ(0))
        for i in range(n)
    ]
    while out and out[-1] == 0:
        out.pop()
    return out


def _e_add(a, b):
    n = max(len(a), len(b))
    out = [
        (a[i] if i < len(a) else QQ(0)) + (b[i] if i < len(b) else QQ(0))
        for i in range(n)
    ]
    while out and out[-1] == 0:
        out.pop()
    return out


def fp_trim(P):
    P = [list(c) for c in P]
    while P and not P[-1]:
        P.pop()
    return P


def fp_deg(P):
    return len(P) - 1


def fp_sub(P, Q):
    n = max(len(P), len(Q))
    out = [
        _e_sub(P[i] if i < len(P) else [], Q[i] if i < len(Q) else [])
        for i in range(n)
    ]
    return fp_trim(out)


def fp_mul(P, Q, h):
    if not P or not Q:
        return []
    out = [[] for _ in range(len(P) + len(Q) - 1)]
    for i, a in enumerate(P):
        if not a:
            continue
        for j, b in enumerate(Q):
            if b:
                out[i + j] = _e_add(out[i + j], _e_mul(a, b, h))
    return fp_trim(out)


def fp_monic(P, h):
    P = fp_trim(P)
    if not P:
        return P
    inv = inverse_mod(P[-1], h)
    return fp_trim([_e_mul(c, inv, h) for c in P])


def fp_divmod(P, Q, h):
    Q = fp_trim(Q)
    if not Q:
        raise ZeroDivisionError("polynomial division by zero")
    inv = inverse_mod(Q[-1], h)
    rem = fp_trim(P)
    dq = len(Q) - 1
    quo = [[] for _ in range(max(len(rem) - dq, 0))]
    while rem and len(rem) - 1 >= dq:
        c = _e_mul(rem[-1], inv, h)
        k = len(rem) - 1 - dq
        quo[k] = c
        for j in range(dq + 1):
            rem[k + j] = _e_sub(rem[k + j], _e_mul(c, Q[j], h))
        rem = fp_trim(rem)
    return fp_trim(quo), rem


def fp_gcd(P, Q, h):
    a, b = fp_trim(P), fp_trim(Q)
    while b:
        a, b = b, fp_divmod(a, b, h)[1]
    return fp_monic(a, h)


def fp_derivative(P):
    return fp_trim([[QQ(i) * c for c in e] for i, e in enumerate(P)][1:])


def fp_squarefree_decomposition(P, h):
    """Yun's algorithm over the field: [(monic squarefree part, multiplicity)]
    with pairwise coprime parts whose weighted product is P up to a unit."""
    P = fp_monic(P, h)
    if fp_deg(P) < 1:
        return []
    dP = fp_derivative(P)
    a = fp_gcd(P, dP, h)
    b = fp_divmod(P, a, h)[0]
    c = fp_divmod(dP, a, h)[0]
    out = []
    i = 1
    while fp_deg(b) > 0:
        d = fp_sub(c, fp_derivative(b))
        g = fp_gcd(b, d, h)
        if fp_deg(g) > 0:
            out.append((g, i))
        b = fp_divmod(b, g, h)[0]
        c = fp_divmod(d, g, h)[0]
        i += 1
    return out
