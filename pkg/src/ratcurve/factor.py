"""Univariate polynomial factorization over the rationals.

Zassenhaus' method: reduce modulo a suitable prime, factor there by
distinct-degree and equal-degree splitting, Hensel-lift the modular factors
past a coefficient bound, and recombine subsets into true integer factors.
The input is made monic by the classical leading-coefficient substitution,
so every lifting step manipulates monic polynomials only.

Dense ascending integer coefficient lists throughout; index i carries x^i.
"""

from __future__ import annotations

import math
import random
from itertools import combinations

from .binary_forms import _u_squarefree_yun
from .rationals import ONE, QQ, denominator, numerator

_RNG_SEED = 0x5EED


# -- integer polynomial helpers ------------------------------------------------


def _z_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _z_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _z_trim(out)


def _z_divmod_monic(a, b):
    """Division by a monic integer polynomial stays in integers."""
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    db = len(b) - 1
    q = [0] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db and rem:
        c = rem[-1]
        k = len(rem) - 1 - db
        q[k] = c
        for j in range(db + 1):
            rem[k + j] -= c * b[j]
        _z_trim(rem)
    return _z_trim(q), rem


def _content(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g or 1


# -- arithmetic modulo a prime --------------------------------------------------


def _p_trim(a, p):
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _p_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _p_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], p - 2, p)
    rem = [c % p for c in a]
    db = len(b) - 1
    q = [0] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        c = (rem[-1] * inv) % p
        k = len(rem) - 1 - db
        q[k] = c
        for j in range(db + 1):
            rem[k + j] = (rem[k + j] - c * b[j]) % p
    while rem and rem[-1] == 0:
        rem.pop()
    while q and q[-1] == 0:
        q.pop()
    return q, rem


def _p_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return [(c * inv) % p for c in a]


def _p_gcd(a, b, p):
    a, b = _p_trim(a, p), _p_trim(b, p)
    while b:
        a, b = b, _p_divmod(a, b, p)[1]
    return _p_monic(a, p)


def _p_ext_gcd(a, b, p):
    """(g, s, t) with s*a + t*b = g (monic gcd) over F_p."""
    r0, r1 = _p_trim(a, p), _p_trim(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _p_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _p_trim([x - y for x, y in _zip_pad(s0, _p_mul(q, s1, p))], p)
        t0, t1 = t1, _p_trim([x - y for x, y in _zip_pad(t0, _p_mul(q, t1, p))], p)
    if not r0:
        return [], s0, t0
    inv = pow(r0[-1], p - 2, p)
    return (
        [(c * inv) % p for c in r0],
        [(c * inv) % p for c in s0],
        [(c * inv) % p for c in t0],
    )


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _p_derivative(a, p):
    return _p_trim([(i * c) % p for i, c in enumerate(a)][1:], p)


def _p_pow_mod(base, e, mod_poly, p):
    result = [1]
    base = _p_divmod(base, mod_poly, p)[1]
    while e:
        if e & 1:
            result = _p_divmod(_p_mul(result, base, p), mod_poly, p)[1]
        base = _p_divmod(_p_mul(base, base, p), mod_poly, p)[1]
        e >>= 1
    return result


# -- factorization over F_p ------------------------------------------------------


def _distinct_degree(f, p):
    """Squarefree monic f -> [(product of degree-d irreducibles, d)]."""
    out = []
    h = [0, 1]  # x
    rest = list(f)
    d = 0
    while len(rest) - 1 > 2 * (d + 1) - 2 and len(rest) > 1:
        d += 1
        h = _p_pow_mod(h, p, rest, p)
        diff = _p_trim([a - b for a, b in _zip_pad(h, [0, 1])], p)
        g = _p_gcd(diff, rest, p)
        if len(g) > 1:
            out.append((g, d))
            rest = _p_divmod(rest, g, p)[0]
            h = _p_divmod(h, rest, p)[1]
    if len(rest) > 1:
        out.append((_p_monic(rest, p), len(rest) - 1))
    return out


def _equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus split of a monic product of degree-d irreducibles
    (p odd)."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = _p_trim(a, p)
        if len(a) <= 1:
            continue
        g = _p_gcd(a, f, p)
        if 1 < len(g) < len(f):
            break
        b = _p_pow_mod(a, (p**d - 1) // 2, f, p)
        b1 = _p_trim([c - (1 if i == 0 else 0) for i, c in enumerate(b)], p)
        g = _p_gcd(b1, f, p)
        if 1 < len(g) < len(f):
            break
    rest = _p_divmod(f, g, p)[0]
    return _equal_degree(g, d, p, rng) + _equal_degree(_p_monic(rest, p), d, p, rng)


def _factor_mod_p(f, p, rng):
    """Monic squarefree f over F_p -> monic irreducible factors."""
    out = []
    for prod, d in _distinct_degree(f, p):
        out.extend(_equal_degree(prod, d, p, rng))
    return sorted(out, key=lambda g: (len(g), g))


# -- Hensel lifting ---------------------------------------------------------------


def _m_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % m
    while out and out[-1] == 0:
        out.pop()
    return out


def _m_divmod_monic(a, b, m):
    rem = [c % m for c in a]
    db = len(b) - 1
    q = [0] * max(len(rem) - db, 0)
    while True:
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db or not rem:
            break
        c = rem[-1]
        k = len(rem) - 1 - db
        q[k] = c
        for j in range(db + 1):
            rem[k + j] = (rem[k + j] - c * b[j]) % m
    while q and q[-1] == 0:
        q.pop()
    return q, rem


def _m_add(a, b, m):
    out = [(x + y) % m for x, y in _zip_pad(list(a), list(b))]
    while out and out[-1] == 0:
        out.pop()
    return out


def _m_sub(a, b, m):
    out = [(x - y) % m for x, y in _zip_pad(list(a), list(b))]
    while out and out[-1] == 0:
        out.pop()
    return out


def _hensel_pair(f, g, h, s, t, p, bound):
    """Lift f = g*h (mod p) with s*g + t*h = 1 (mod p), f/g/h monic, to
    modulus >= bound. Returns (g, h, modulus)."""
    m = p
    while m < bound:
        m2 = m * m
        e = _m_sub(f, _m_mul(g, h, m2), m2)
        q, r = _m_divmod_monic(_m_mul(s, e, m2), h, m2)
        g = _m_add(g, _m_add(_m_mul(t, e, m2), _m_mul(q, g, m2), m2), m2)
        h = _m_add(h, r, m2)
        d = _m_sub(_m_add(_m_mul(s, g, m2), _m_mul(t, h, m2), m2), [1], m2)
        one_minus_d = _m_sub([1], d, m2)
        q2, s = _m_divmod_monic(_m_mul(s, one_minus_d, m2), h, m2)
        t = _m_add(_m_mul(t, one_minus_d, m2), _m_mul(q2, g, m2), m2)
        m = m2
    return g, h, m


def _lift_factors(f, mod_factors, p, bound):
    """Lift the modular factorization of monic f to modulus >= bound,
    peeling one factor at a time. Returns (lifted factors, modulus)."""
    if len(mod_factors) == 1:
        m = p
        while m < bound:
            m = m * m
        return [[c % m for c in f]], m
    g0 = mod_factors[0]
    h0 = [1]
    for fac in mod_factors[1:]:
        h0 = _p_mul(h0, fac, p)
    _, s, t = _p_ext_gcd(g0, h0, p)
    g, h, m = _hensel_pair(f, g0, h0, s, t, p, bound)
    rest, m2 = _lift_factors(h, mod_factors[1:], p, bound)
    if m2 != m:
        raise ArithmeticError("inconsistent lifting moduli")
    return [g] + rest, m


# -- recombination ---------------------------------------------------------------


def _symmetric(a, m):
    half = m // 2
    return [c - m if c > half else c for c in a]


def _mignotte_bound(f):
    """Coefficient bound for monic divisors of monic f over Z."""
    norm = math.isqrt(sum(c * c for c in f)) + 1
    return (norm + abs(f[-1])) << (len(f) - 1)


_PRIMES = (
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
)


def _factor_monic_squarefree_z(f):
    """Monic squarefree integer polynomial -> monic irreducible factors."""
    if len(f) - 1 <= 1:
        return [list(f)]
    rng = random.Random(_RNG_SEED)
    best = None
    tried = 0
    for p in _PRIMES:
        fp = _p_trim(f, p)
        if len(fp) != len(f):
            continue
        fp = _p_monic(fp, p)
        if len(_p_gcd(fp, _p_derivative(fp, p), p)) > 1:
            continue
        facs = _factor_mod_p(fp, p, rng)
        tried += 1
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        if len(best[1]) == 1 or tried >= 4:
            break
    if best is None:
        raise ArithmeticError("no usable prime found for factorization")
    p, mod_factors = best
    if len(mod_factors) == 1:
        return [list(f)]
    bound = 2 * _mignotte_bound(f) + 1
    lifted, m = _lift_factors(f, mod_factors, p, bound)
    found = []
    remaining = list(f)
    pool = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(pool):
        restart = False
        for combo in combinations(pool, size):
            cand = [1]
            for i in combo:
                cand = _m_mul(cand, lifted[i], m)
            cand = _symmetric([c % m for c in cand], m)
            if remaining[0] != 0 and cand[0] != 0 and remaining[0] % cand[0] != 0:
                continue
            q, r = _z_divmod_monic(remaining, cand)
            if not r:
                found.append(cand)
                remaining = q
                pool = [i for i in pool if i not in combo]
                restart = True
                break
        if not restart:
            size += 1
    if len(remaining) > 1:
        found.append(remaining)
    return sorted(found, key=lambda g: (len(g), g))


def _monic_substitution(f):
    """Primitive integer f -> (monic F with F(y) = lc^(n-1) f(y/lc), lc)."""
    lc = f[-1]
    n = len(f) - 1
    return [c * lc ** (n - 1 - i) for i, c in enumerate(f[:-1])] + [1], lc


def _undo_substitution(g, lc):
    """Monic factor G(y) of the substituted polynomial -> primitive factor
    G(lc*x) made primitive over Z."""
    out = [c * lc**i for i, c in enumerate(g)]
    cont = _content(out)
    out = [c // cont for c in out]
    if out[-1] < 0:
        out = [-c for c in out]
    return out


def irreducible_factors_squarefree(coeffs_q):
    """Monic irreducible rational factors of a squarefree polynomial with
    rational coefficients (dense ascending). The product of the results is
    the monic normalization of the input."""
    cs = [QQ(c) for c in coeffs_q]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) <= 1:
        raise ValueError("constant polynomial")
    lcm = 1
    for c in cs:
        d = int(denominator(c))
        lcm = lcm * d // math.gcd(lcm, d)
    zs = [int(numerator(c)) * (lcm // int(denominator(c))) for c in cs]
    cont = _content(zs)
    zs = [c // cont for c in zs]
    if zs[-1] < 0:
        zs = [-c for c in zs]
    factors = []
    if zs[0] == 0:
        v = next(i for i, c in enumerate(zs) if c != 0)
        factors.extend([[0, 1]] * v)
        zs = zs[v:]
    if len(zs) > 1:
        monic, lc = _monic_substitution(zs)
        for g in _factor_monic_squarefree_z(monic):
            factors.append(_undo_substitution(g, lc))
    out = []
    for f in factors:
        lead = QQ(f[-1])
        out.append([QQ(c) / lead for c in f])
    return sorted(out, key=lambda g: (len(g), [str(c) for c in g]))


def irreducible_factors(coeffs_q):
    """[(monic irreducible rational factor, multiplicity)] for any nonzero
    rational polynomial of positive degree."""
    parts = _u_squarefree_yun([QQ(c) for c in coeffs_q])
    out = []
    for base, mult in parts:
        if len(base) <= 1:
            continue
        for g in irreducible_factors_squarefree(base):
            out.append((g, mult))
    return out
