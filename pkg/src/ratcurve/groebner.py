"""Buchberger's algorithm with the classical pruning criteria.

Pair selection uses the sugar degree with the packed lcm key as tie-break;
the product (coprime leading terms) and chain criteria are applied when a
pair is popped. New basis elements are made integer-primitive to keep
coefficient growth in check; the final basis is minimalized, tail-reduced,
made monic and sorted, giving the unique reduced basis for (ideal, order).
"""

from __future__ import annotations

import heapq
from math import gcd as _int_gcd

from ._kernel import merge_sub, normal_form, scale_shift
from .orders import MonomialOrder
from .polynomials import MultiPoly, Ring
from .rationals import QQ, numerator, denominator


def to_kernel(p: MultiPoly, order: MonomialOrder) -> list:
    items = [(order.key(e), e, c) for e, c in p.terms.items()]
    items.sort(reverse=True)
    return items


def from_kernel(ring: Ring, terms: list) -> MultiPoly:
    return MultiPoly(ring, {e: c for _, e, c in terms})


def _make_primitive(terms: list) -> list:
    """Scale a kernel poly to integer-primitive with positive leading coeff."""
    if not terms:
        return terms
    num_gcd = 0
    den_lcm = 1
    for _, _, c in terms:
        num_gcd = _int_gcd(num_gcd, abs(numerator(c)))
        d = denominator(c)
        den_lcm = den_lcm // _int_gcd(den_lcm, d) * d
    scale = QQ(den_lcm, num_gcd)
    if terms[0][2] < 0:
        scale = -scale
    if scale == 1:
        return terms
    return [(k, e, c * scale) for k, e, c in terms]


def _make_monic(terms: list) -> list:
    if not terms or terms[0][2] == 1:
        return terms
    inv = 1 / QQ(terms[0][2])
    return [(k, e, c * inv) for k, e, c in terms]


def _exp_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _exp_divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _spoly(f: list, g: list, order: MonomialOrder) -> list:
    kf, ef, cf = f[0]
    kg, eg, cg = g[0]
    lcm = _exp_lcm(ef, eg)
    klcm = order.key(lcm)
    left = scale_shift(f[1:], klcm - kf, tuple(a - b for a, b in zip(lcm, ef)), 1 / QQ(cf))
    right = scale_shift(g[1:], klcm - kg, tuple(a - b for a, b in zip(lcm, eg)), 1 / QQ(cg))
    return merge_sub(left, right)


def buchberger(kgens: list, order: MonomialOrder) -> list:
    """Reduced Groebner basis of the kernel polynomials, sorted by leading
    key ascending, elements monic."""
    basis = [_make_primitive(g) for g in kgens if g]
    basis = _interreduce(basis, order)
    if not basis:
        return []
    if any(sum(g[0][1]) == 0 for g in basis):
        one = order.key((0,) * order.nvars)
        return [[(one, (0,) * order.nvars, QQ(1))]]

    def _sugar_of(terms: list) -> int:
        return max(sum(e) for _, e, _ in terms)

    sugars = [_sugar_of(g) for g in basis]

    heap: list = []
    done = set()

    def push_pair(i: int, j: int):
        if i > j:
            i, j = j, i
        ei = basis[i][0][1]
        ej = basis[j][0][1]
        lcm = _exp_lcm(ei, ej)
        deg_l = sum(lcm)
        sugar = max(sugars[i] + deg_l - sum(ei), sugars[j] + deg_l - sum(ej))
        heapq.heappush(heap, (sugar, order.key(lcm), i, j))

    n0 = len(basis)
    for i in range(n0):
        for j in range(i + 1, n0):
            push_pair(i, j)

    while heap:
        sugar, klcm, i, j = heapq.heappop(heap)
        if (i, j) in done:
            continue
        done.add((i, j))
        ei = basis[i][0][1]
        ej = basis[j][0][1]
        lcm = _exp_lcm(ei, ej)
        # product criterion
        if all(a + b == l for a, b, l in zip(ei, ej, lcm)):
            continue
        # chain criterion: an already-handled element divides the lcm
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if _exp_divides(basis[k][0][1], lcm):
                a1 = (min(i, k), max(i, k))
                a2 = (min(j, k), max(j, k))
                if a1 in done and a2 in done:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(basis[i], basis[j], order)
        h = normal_form(s, basis, True)
        if not h:
            continue
        h = _make_primitive(h)
        if sum(h[0][1]) == 0:
            one = order.key((0,) * order.nvars)
            return [[(one, (0,) * order.nvars, QQ(1))]]
        basis.append(h)
        sugars.append(max(sugar, _sugar_of(h)))
        t = len(basis) - 1
        for i2 in range(t):
            push_pair(i2, t)

    return _reduce_basis(basis, order)


def _interreduce(basis: list, order: MonomialOrder) -> list:
    """Fully reduce every element against the others until stable."""
    basis = [g for g in basis if g]
    changed = True
    while changed:
        changed = False
        basis.sort(key=lambda g: g[0][0])
        out: list = []
        for idx, g in enumerate(basis):
            others = out + basis[idx + 1 :]
            h = normal_form(g, others, True) if others else g
            if h != g:
                changed = True
            if h:
                out.append(_make_primitive(h))
        basis = out
    return basis


def _reduce_basis(basis: list, order: MonomialOrder) -> list:
    # minimalize: drop elements whose lead is divisible by another lead
    keep = []
    leads = [g[0][1] for g in basis]
    for i, g in enumerate(basis):
        li = leads[i]
        redundant = False
        for j, lj in enumerate(leads):
            if i == j:
                continue
            if _exp_divides(lj, li) and (lj != li or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    # tail-reduce each against the rest
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        h = normal_form(g, others, True) if others else g
        out.append(_make_monic(h))
    out.sort(key=lambda g: g[0][0])
    return out
